#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "mastermind/dou/combo.hpp"

namespace mastermind::dou {

class EmptyInput : public std::invalid_argument {
 public:
  EmptyInput() : std::invalid_argument("scored action list is empty") {}
};

/// Per-action weights: raw scores (logits, win fractions) or a probability
/// distribution once normalized.
struct ScoredActions {
  std::vector<std::pair<Combo, double>> entries;
  bool normalized = false;

  /// softmax(weight / temperature). Throws EmptyInput.
  ScoredActions softmax(double temperature = 1.0) const;
  /// Divides by the total; all-zero weights become uniform. Throws
  /// EmptyInput or std::invalid_argument on negative weights.
  ScoredActions normalize() const;
  /// Highest weight, ties to the canonically smallest combo.
  const Combo& argmax() const;
  double weight_of(const Combo& combo) const;
};

/// Probability-descending order with canonical tie-breaks.
std::vector<std::pair<Combo, double>> descending(const ScoredActions& scored);

/// Minimal prefix of the descending order whose cumulative probability
/// reaches p; p == 1 keeps every action. Throws EmptyInput, or
/// std::invalid_argument for p outside (0, 1].
std::vector<Combo> top_p_filter(const ScoredActions& scored, double p);

/// Candidate mass used when building Doudizhu possible-action lists.
inline constexpr double kDouTopP = 0.25;

}  // namespace mastermind::dou
