#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mastermind/common/task.hpp"

namespace mastermind::evalkit {

/// A metric as it appears in reports ("key") and in dataset manifests
/// ("label").
struct MetricName {
  std::string key;
  std::string label;
};

/// The metrics reported for a task, in table order.
std::vector<MetricName> task_metrics(Task task);

struct EvalOptions {
  /// Score CoT RLsum over the whole answer instead of the reasoning span
  /// before the concluding line.
  bool rlsum_full_answer = false;
};

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rows are dataset samples with an added "prediction" string. Returns
/// {"TASK.metric": value, ..., "n": rows, "per_task": {...}, "config": {...}}.
/// Throws ReportError for rows missing fields or whose ground-truth answer
/// does not parse.
nlohmann::json evaluate_rows(const std::vector<nlohmann::json>& rows,
                             const EvalOptions& options = {});

/// Reads line-delimited JSON; blank lines are skipped. Throws ReportError
/// naming the line.
std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);

}  // namespace mastermind::evalkit
