#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mastermind::evalkit {

class MetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class LengthMismatch : public MetricError {
 public:
  LengthMismatch(std::size_t preds, std::size_t labels);
};
class Empty : public MetricError {
 public:
  Empty() : MetricError("metric input is empty") {}
};

/// Penalties charged for an answer whose number could not be read.
inline constexpr double kScoreFallbackError = 10.0;
inline constexpr double kWinrateFallbackError = 1.0;

/// Fraction of exact matches. nullopt predictions (format failures) count as
/// mismatches.
double action_accuracy(const std::vector<std::optional<std::string>>& preds,
                       const std::vector<std::string>& labels);

/// Per-sample all-or-nothing cell equality between board texts. A
/// prediction that does not parse as a board is wrong; labels must parse.
double s_prime_accuracy(const std::vector<std::string>& pred_boards,
                        const std::vector<std::string>& label_boards);

double score_mae(const std::vector<std::optional<double>>& preds,
                 const std::vector<double>& labels);
double winrate_mae(const std::vector<std::optional<double>>& preds,
                   const std::vector<double>& labels);

/// Whole-chain matching: a sample counts only if every predicted response
/// equals its label. Missing or empty predictions are wrong.
double pred_accuracy(
    const std::vector<std::optional<std::vector<std::string>>>& preds,
    const std::vector<std::vector<std::string>>& labels);

/// Mean of rl_sum over aligned pairs.
double mean_rl_sum(const std::vector<std::string>& candidates,
                   const std::vector<std::string>& references);

}  // namespace mastermind::evalkit
