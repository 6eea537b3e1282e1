#include "mastermind/go/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mastermind/bridge/analysis.hpp"

namespace mastermind::go {

namespace {

int line_of(const GoState& s, Point p) {
  return std::min({p.col, p.row, s.size() + 1 - p.col, s.size() + 1 - p.row});
}

bool fills_own_eye(const GoState& s, int index, Color c) {
  int nb[4];
  const int n = neighbours(s.size(), index, nb);
  for (int k = 0; k < n; ++k) {
    if (s.at(nb[k]) != c) return false;
  }
  const Point p = s.point_of(index);
  int opponent = 0;
  bool edge = false;
  for (int dc : {-1, 1}) {
    for (int dr : {-1, 1}) {
      const Point d{p.col + dc, p.row + dr};
      if (!s.on_board(d)) {
        edge = true;
      } else if (s.at(d) == opposite(c)) {
        ++opponent;
      }
    }
  }
  return opponent + (edge ? 1 : 0) < 2;
}

}  // namespace

std::string_view tier_name(GoTier tier) {
  return tier == GoTier::Optimal ? "optimal" : "suboptimal";
}

GoTier parse_tier(std::string_view text) {
  if (text == "optimal") return GoTier::Optimal;
  if (text == "suboptimal") return GoTier::Suboptimal;
  throw std::invalid_argument("unknown Go tier '" + std::string(text) + "'");
}

MoveDistribution heuristic_policy(const GoState& state, Rng& rng,
                                  double temperature) {
  const Color me = state.to_move();
  std::optional<Point> last;
  if (!state.history().empty() && !state.history().back().is_pass()) {
    last = state.history().back().point;
  }
  std::vector<std::pair<GoMove, double>> scored;
  std::uniform_real_distribution<double> jitter(0.0, 0.5);
  int nb[4];
  for (int i = 0; i < state.area(); ++i) {
    if (state.at(i) != Color::Empty) continue;
    const Point p = state.point_of(i);
    const GoMove move = GoMove::play(me, p);
    GoState next;
    try {
      next = apply_move(state, move);
    } catch (const GoError&) {
      continue;
    }
    double score = 0.0;
    const int captured = next.captured(opposite(me)) - state.captured(opposite(me));
    score += 3.0 * captured;
    const int n = neighbours(state.size(), i, nb);
    for (int k = 0; k < n; ++k) {
      const int q = nb[k];
      if (state.at(q) == me && chain_at(state, q).liberties == 1) score += 2.0;
      if (next.at(q) == opposite(me) && chain_at(next, q).liberties == 1) {
        score += 1.0;
      }
    }
    const ChainInfo own = chain_at(next, i);
    if (own.liberties == 1 && captured == 0) score -= 3.0;
    if (fills_own_eye(state, i, me)) score -= 6.0;
    const int line = line_of(state, p);
    if (line == 1) score -= 1.0;
    if (line == 3 || line == 4) score += 0.5;
    if (last && std::abs(last->col - p.col) + std::abs(last->row - p.row) <= 2) {
      score += 0.3;
    }
    scored.emplace_back(move, score + jitter(rng));
  }
  scored.emplace_back(GoMove::pass(me), -2.0);
  double best = -1e300;
  for (const auto& [m, s] : scored) best = std::max(best, s);
  double total = 0.0;
  for (auto& [m, s] : scored) {
    s = std::exp((s - best) / temperature);
    total += s;
  }
  for (auto& [m, s] : scored) s /= total;
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return MoveDistribution{std::move(scored)};
}

MoveDistribution distribution_from_analysis(const bridge::AnalysisRecord& rec) {
  MoveDistribution d;
  double total = 0.0;
  for (const auto& c : rec.candidates) total += c.visits;
  for (const auto& c : rec.candidates) {
    d.entries.emplace_back(c.move, total > 0 ? c.visits / total
                                             : 1.0 / rec.candidates.size());
  }
  std::stable_sort(d.entries.begin(), d.entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return d;
}

std::size_t nucleus_size(const std::vector<double>& descending, double p) {
  if (descending.empty()) throw std::invalid_argument("empty distribution");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in (0, 1]");
  if (p >= 1.0) return descending.size();
  double cumulative = 0.0;
  for (std::size_t k = 0; k < descending.size(); ++k) {
    cumulative += descending[k];
    if (cumulative >= p - 1e-12) return k + 1;
  }
  return descending.size();
}

GoMove select_move(const MoveDistribution& dist, GoTier tier, double p,
                   Rng& rng) {
  if (dist.entries.empty()) throw std::invalid_argument("empty distribution");
  if (tier == GoTier::Optimal) return dist.entries.front().first;
  std::vector<double> probs;
  for (const auto& e : dist.entries) probs.push_back(e.second);
  const std::size_t keep = nucleus_size(probs, p);
  double mass = 0.0;
  for (std::size_t k = 0; k < keep; ++k) mass += probs[k];
  double u = std::uniform_real_distribution<double>(0.0, mass)(rng);
  for (std::size_t k = 0; k < keep; ++k) {
    u -= probs[k];
    if (u < 0.0) return dist.entries[k].first;
  }
  return dist.entries[keep - 1].first;
}

}  // namespace mastermind::go
