#include "mastermind/evalkit/metrics.hpp"

#include <cmath>

#include "mastermind/evalkit/rouge.hpp"
#include "mastermind/go/codec.hpp"

namespace mastermind::evalkit {

LengthMismatch::LengthMismatch(std::size_t preds, std::size_t labels)
    : MetricError("length mismatch: " + std::to_string(preds) +
                  " predictions, " + std::to_string(labels) + " labels") {}

namespace {

template <typename A, typename B>
void check_sizes(const A& preds, const B& labels) {
  if (preds.size() != labels.size()) {
    throw LengthMismatch(preds.size(), labels.size());
  }
  if (labels.empty()) throw Empty();
}

double mae(const std::vector<std::optional<double>>& preds,
           const std::vector<double>& labels, double fallback) {
  check_sizes(preds, labels);
  double total = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (preds[i] && std::isfinite(*preds[i])) {
      total += std::abs(*preds[i] - labels[i]);
    } else {
      total += fallback;
    }
  }
  return total / static_cast<double>(preds.size());
}

}  // namespace

double action_accuracy(const std::vector<std::optional<std::string>>& preds,
                       const std::vector<std::string>& labels) {
  check_sizes(preds, labels);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (preds[i] && *preds[i] == labels[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(preds.size());
}

double s_prime_accuracy(const std::vector<std::string>& pred_boards,
                        const std::vector<std::string>& label_boards) {
  check_sizes(pred_boards, label_boards);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < pred_boards.size(); ++i) {
    const go::Grid label = go::parse_grid(label_boards[i]);
    try {
      const go::Grid pred = go::parse_grid(pred_boards[i]);
      if (pred.size == label.size && pred.cells == label.cells) ++hits;
    } catch (const go::BoardParseError&) {
    }
  }
  return static_cast<double>(hits) / static_cast<double>(pred_boards.size());
}

double score_mae(const std::vector<std::optional<double>>& preds,
                 const std::vector<double>& labels) {
  return mae(preds, labels, kScoreFallbackError);
}

double winrate_mae(const std::vector<std::optional<double>>& preds,
                   const std::vector<double>& labels) {
  return mae(preds, labels, kWinrateFallbackError);
}

double pred_accuracy(
    const std::vector<std::optional<std::vector<std::string>>>& preds,
    const std::vector<std::vector<std::string>>& labels) {
  check_sizes(preds, labels);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (preds[i] && !preds[i]->empty() && *preds[i] == labels[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(preds.size());
}

double mean_rl_sum(const std::vector<std::string>& candidates,
                   const std::vector<std::string>& references) {
  check_sizes(candidates, references);
  double total = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    total += rl_sum(candidates[i], references[i]);
  }
  return total / static_cast<double>(candidates.size());
}

}  // namespace mastermind::evalkit
