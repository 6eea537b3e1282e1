#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "mastermind/common/rng.hpp"
#include "mastermind/go/state.hpp"

namespace mastermind::bridge {
struct AnalysisRecord;
}

namespace mastermind::go {

/// Candidate mass kept by the sub-optimal self-play tier.
inline constexpr double kGoTopP = 0.4;

/// Two self-play strengths: always the best move, or a draw from the Top-p
/// nucleus of the move distribution.
enum class GoTier { Optimal, Suboptimal };
std::string_view tier_name(GoTier tier);
GoTier parse_tier(std::string_view text);

/// Move probabilities in descending order (ties by board index, pass last).
struct MoveDistribution {
  std::vector<std::pair<GoMove, double>> entries;
};

/// Cheap built-in policy: captures, atari escapes and threats, line
/// preference and locality to the last move, softmaxed with `temperature`.
/// `rng` adds a small score jitter so games differ. Own-eye fills and
/// self-atari are penalised; pass is preferred only when nothing else is
/// reasonable.
MoveDistribution heuristic_policy(const GoState& state, Rng& rng,
                                  double temperature = 0.5);

/// Visit-share distribution from an engine analysis.
MoveDistribution distribution_from_analysis(const bridge::AnalysisRecord& rec);

/// Optimal: first entry. Suboptimal: renormalized draw from the minimal
/// prefix reaching mass p.
GoMove select_move(const MoveDistribution& dist, GoTier tier, double p,
                   Rng& rng);

/// Number of leading entries of a descending probability list that reach
/// cumulative mass p (at least one).
std::size_t nucleus_size(const std::vector<double>& descending, double p);

}  // namespace mastermind::go
