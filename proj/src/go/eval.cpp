#include "mastermind/go/eval.hpp"

#include <cmath>

#include "mastermind/bridge/analysis.hpp"
#include "mastermind/common/rng.hpp"
#include "mastermind/go/playout.hpp"

namespace mastermind::go {

namespace {

Owner discretize(double raw, double theta) {
  if (raw >= theta) return Owner::Black;
  if (raw <= -theta) return Owner::White;
  return Owner::Undecided;
}

struct RolloutTotals {
  std::vector<long long> ownership;
  int black_wins = 0;
  int white_wins = 0;
};

RolloutTotals run_rollouts(const GoState& state, int n, std::uint64_t seed,
                           double komi) {
  if (n < 1) throw std::invalid_argument("n_rollouts must be at least 1");
  RolloutTotals t;
  t.ownership.assign(state.area(), 0);
  const PlayoutBoard start(state);
  for (int i = 0; i < n; ++i) {
    Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(i)}));
    PlayoutBoard board = start;
    board.run(rng);
    const std::vector<int> owner = board.area_ownership();
    int diff = 0;
    for (int k = 0; k < state.area(); ++k) {
      t.ownership[k] += owner[k];
      diff += owner[k];
    }
    if (diff - komi > 0) ++t.black_wins;
    if (diff - komi < 0) ++t.white_wins;
  }
  return t;
}

}  // namespace

OwnershipMap OwnershipMap::from_raw(int size, std::vector<double> raw,
                                    double theta) {
  if (raw.size() != static_cast<std::size_t>(size) * size) {
    throw std::invalid_argument("ownership grid does not match board size");
  }
  OwnershipMap m;
  m.size = size;
  m.theta = theta;
  m.discrete.reserve(raw.size());
  for (double v : raw) m.discrete.push_back(discretize(v, theta));
  m.raw = std::move(raw);
  return m;
}

OwnershipMap OwnershipMap::from_discrete(int size, std::vector<Owner> cells,
                                         double theta) {
  std::vector<double> raw;
  raw.reserve(cells.size());
  for (Owner o : cells) {
    raw.push_back(o == Owner::Black ? 1.0 : (o == Owner::White ? -1.0 : 0.0));
  }
  return from_raw(size, std::move(raw), theta);
}

OwnershipMap estimate_ownership(const GoState& state, int n_rollouts,
                                std::uint64_t seed, double theta) {
  const RolloutTotals t = run_rollouts(state, n_rollouts, seed, kDefaultKomi);
  std::vector<double> raw(state.area());
  for (int k = 0; k < state.area(); ++k) {
    raw[k] = static_cast<double>(t.ownership[k]) / n_rollouts;
  }
  return OwnershipMap::from_raw(state.size(), std::move(raw), theta);
}

TerritoryCounts count_territory(const OwnershipMap& map) {
  TerritoryCounts c;
  for (Owner o : map.discrete) {
    if (o == Owner::Black) ++c.black;
    if (o == Owner::White) ++c.white;
  }
  return c;
}

double score_lead(TerritoryCounts counts, double komi) {
  return static_cast<double>(counts.black) - counts.white - komi;
}

double lead_for(double black_lead, Color side) {
  return side == Color::White ? -black_lead : black_lead;
}

double winrate_for(double black_winrate, Color side) {
  return side == Color::White ? 1.0 - black_winrate : black_winrate;
}

double estimate_winrate(const GoState& state, int n_rollouts,
                        std::uint64_t seed, double komi, Color side) {
  const RolloutTotals t = run_rollouts(state, n_rollouts, seed, komi);
  const int wins = side == Color::White ? t.white_wins : t.black_wins;
  return static_cast<double>(wins) / n_rollouts;
}

std::string_view source_name(EvalSource s) {
  return s == EvalSource::BuiltinMc ? "BUILTIN_MC" : "EXTERNAL_ENGINE";
}

PositionEval evaluate_position(const GoState& state, const EvalConfig& config) {
  const RolloutTotals t =
      run_rollouts(state, config.n_rollouts, config.seed, config.komi);
  std::vector<double> raw(state.area());
  for (int k = 0; k < state.area(); ++k) {
    raw[k] = static_cast<double>(t.ownership[k]) / config.n_rollouts;
  }
  PositionEval e;
  e.ownership = OwnershipMap::from_raw(state.size(), std::move(raw), config.theta);
  e.komi = config.komi;
  e.score_lead = score_lead(count_territory(e.ownership), config.komi);
  e.win_rate = static_cast<double>(t.black_wins) / config.n_rollouts;
  e.source = EvalSource::BuiltinMc;
  e.engine_score_lead = e.score_lead;
  return e;
}

void validate_eval(const PositionEval& eval, int size) {
  const auto cells = static_cast<std::size_t>(size) * size;
  if (eval.ownership.size != size || eval.ownership.raw.size() != cells ||
      eval.ownership.discrete.size() != cells) {
    throw InvalidEval("ownership grid does not match a " +
                      std::to_string(size) + "x" + std::to_string(size) +
                      " board");
  }
  for (double v : eval.ownership.raw) {
    if (!(v >= -1.0 && v <= 1.0)) {
      throw InvalidEval("ownership value outside [-1,1]");
    }
  }
  if (!(eval.win_rate >= 0.0 && eval.win_rate <= 1.0)) {
    throw InvalidEval("win rate outside [0,1]");
  }
  if (!std::isfinite(eval.score_lead) || !std::isfinite(eval.komi)) {
    throw InvalidEval("score lead is not finite");
  }
}

PositionEval eval_from_analysis(const bridge::AnalysisRecord& record, int size,
                                double komi, double theta) {
  PositionEval e;
  e.ownership = OwnershipMap::from_raw(size, record.ownership, theta);
  e.komi = komi;
  e.win_rate = record.win_rate;
  e.score_lead = score_lead(count_territory(e.ownership), komi);
  e.engine_score_lead = record.score_lead;
  e.source = EvalSource::ExternalEngine;
  validate_eval(e, size);
  return e;
}

}  // namespace mastermind::go
