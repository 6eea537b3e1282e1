#include "mastermind/dou/scored_actions.hpp"

#include <algorithm>
#include <cmath>

namespace mastermind::dou {

ScoredActions ScoredActions::softmax(double temperature) const {
  if (entries.empty()) throw EmptyInput();
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("softmax temperature must be positive");
  }
  double peak = entries.front().second;
  for (const auto& [combo, w] : entries) peak = std::max(peak, w);
  ScoredActions out;
  out.normalized = true;
  double total = 0.0;
  for (const auto& [combo, w] : entries) {
    double e = std::exp((w - peak) / temperature);
    out.entries.emplace_back(combo, e);
    total += e;
  }
  for (auto& [combo, w] : out.entries) w /= total;
  return out;
}

ScoredActions ScoredActions::normalize() const {
  if (entries.empty()) throw EmptyInput();
  double total = 0.0;
  for (const auto& [combo, w] : entries) {
    if (w < 0.0 || !std::isfinite(w)) {
      throw std::invalid_argument("weights must be finite and non-negative");
    }
    total += w;
  }
  ScoredActions out = *this;
  out.normalized = true;
  for (auto& [combo, w] : out.entries) {
    w = total > 0.0 ? w / total : 1.0 / static_cast<double>(entries.size());
  }
  return out;
}

const Combo& ScoredActions::argmax() const {
  if (entries.empty()) throw EmptyInput();
  const auto* best = &entries.front();
  for (const auto& e : entries) {
    if (e.second > best->second ||
        (e.second == best->second && canonical_less(e.first, best->first))) {
      best = &e;
    }
  }
  return best->first;
}

double ScoredActions::weight_of(const Combo& combo) const {
  for (const auto& [c, w] : entries) {
    if (c == combo) return w;
  }
  return 0.0;
}

std::vector<std::pair<Combo, double>> descending(const ScoredActions& scored) {
  auto order = scored.entries;
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return canonical_less(a.first, b.first);
  });
  return order;
}

std::vector<Combo> top_p_filter(const ScoredActions& scored, double p) {
  if (scored.entries.empty()) throw EmptyInput();
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("top-p mass must lie in (0, 1]");
  }
  std::vector<Combo> out;
  double cumulative = 0.0;
  for (const auto& [combo, prob] : descending(scored)) {
    out.push_back(combo);
    cumulative += prob;
    if (p < 1.0 && cumulative >= p - 1e-12) break;
  }
  return out;
}

}  // namespace mastermind::dou
