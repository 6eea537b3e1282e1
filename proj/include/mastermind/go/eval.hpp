#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mastermind/go/state.hpp"

namespace mastermind::bridge {
struct AnalysisRecord;
}

namespace mastermind::go {

inline constexpr double kDefaultOwnershipThreshold = 0.6;
inline constexpr double kDefaultKomi = 7.5;

enum class Owner : std::uint8_t { Undecided, Black, White };

/// Ownership from black's point of view: raw +1 is surely black's, -1 surely
/// white's. A cell is discretized to Black at raw >= theta and to White at
/// raw <= -theta.
struct OwnershipMap {
  int size = 0;
  double theta = kDefaultOwnershipThreshold;
  std::vector<double> raw;      // GoState index order (row 1 first)
  std::vector<Owner> discrete;  // same order

  static OwnershipMap from_raw(int size, std::vector<double> raw,
                               double theta = kDefaultOwnershipThreshold);
  /// A map given directly in discrete form; raw is +1/-1/0.
  static OwnershipMap from_discrete(int size, std::vector<Owner> cells,
                                    double theta = kDefaultOwnershipThreshold);
};

/// Mean area ownership over n uniform random playouts. Playout i draws from
/// derive_seed(seed, {i}).
OwnershipMap estimate_ownership(const GoState& state, int n_rollouts,
                                std::uint64_t seed,
                                double theta = kDefaultOwnershipThreshold);

struct TerritoryCounts {
  int black = 0;
  int white = 0;
  friend bool operator==(const TerritoryCounts&, const TerritoryCounts&) = default;
};

/// The Count tool: number of Black and White cells in the discrete map.
TerritoryCounts count_territory(const OwnershipMap& map);

/// black - white - komi. Positive favours black.
double score_lead(TerritoryCounts counts, double komi);

/// Re-expresses a black-perspective lead or ownership value for `side`.
double lead_for(double black_lead, Color side);
/// Re-expresses a black-perspective win rate for `side`.
double winrate_for(double black_winrate, Color side);

/// Fraction of playouts where `side` wins on area with komi.
double estimate_winrate(const GoState& state, int n_rollouts,
                        std::uint64_t seed, double komi = kDefaultKomi,
                        Color side = Color::Black);

enum class EvalSource : std::uint8_t { BuiltinMc, ExternalEngine };
std::string_view source_name(EvalSource s);

/// Ownership, lead and win rate for one position, all from black's point of
/// view. For the built-in estimator score_lead is always
/// score_lead(count_territory(ownership), komi).
struct PositionEval {
  OwnershipMap ownership;
  double score_lead = 0.0;
  double win_rate = 0.5;
  double komi = kDefaultKomi;
  EvalSource source = EvalSource::BuiltinMc;
  /// The engine's own lead estimate (external evals only).
  double engine_score_lead = 0.0;
};

struct EvalConfig {
  int n_rollouts = 64;
  std::uint64_t seed = 0;
  double komi = kDefaultKomi;
  double theta = kDefaultOwnershipThreshold;
};

/// Ownership and win rate from one shared batch of playouts.
PositionEval evaluate_position(const GoState& state, const EvalConfig& config);

class InvalidEval : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws InvalidEval unless win_rate is in [0,1], the lead is finite,
/// ownership values lie in [-1,1] and the grid is size x size.
void validate_eval(const PositionEval& eval, int size);

/// Wraps an engine analysis (already in black's perspective) as an eval. The
/// lead is recomputed from the discretized ownership with the Count tool; the
/// engine's lead is kept in engine_score_lead.
PositionEval eval_from_analysis(const bridge::AnalysisRecord& record, int size,
                                double komi = kDefaultKomi,
                                double theta = kDefaultOwnershipThreshold);

}  // namespace mastermind::go
