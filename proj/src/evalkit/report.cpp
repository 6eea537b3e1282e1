#include "mastermind/evalkit/report.hpp"

#include <fstream>
#include <map>
#include <optional>

#include "mastermind/evalkit/answer.hpp"
#include "mastermind/evalkit/metrics.hpp"
#include "mastermind/evalkit/rouge.hpp"

namespace mastermind::evalkit {

std::vector<MetricName> task_metrics(Task task) {
  switch (task) {
    case Task::DouProb:
      return {{"cot_rlsum", "CoT RLsum"}, {"action_acc", "Act. Acc."}};
    case Task::DouNoProb:
      return {{"action_acc", "Act. Acc."}};
    case Task::DouPredProb:
      return {{"pred_acc", "Pred. Acc."}};
    case Task::GoNextState:
      return {{"s_prime_acc", "s' Acc."}, {"move_acc", "Act. Acc."}};
    case Task::GoAnalysis:
      return {{"score_mae", "Score MAE"}, {"winrate_mae", "Winrate MAE"}};
    case Task::GoStateExpl:
      return {{"rlsum", "RLsum"}};
  }
  return {};
}

namespace {

struct TaskBucket {
  std::size_t n = 0;
  std::size_t format_failures = 0;

  std::vector<std::optional<std::string>> action_preds;
  std::vector<std::string> action_labels;
  std::vector<std::string> thought_preds;
  std::vector<std::string> thought_labels;

  std::vector<std::optional<std::vector<std::string>>> chain_preds;
  std::vector<std::vector<std::string>> chain_labels;

  std::vector<std::string> board_preds;
  std::vector<std::string> board_labels;
  std::vector<std::optional<std::string>> move_preds;
  std::vector<std::string> move_labels;

  std::vector<std::optional<double>> lead_preds;
  std::vector<double> lead_labels;
  std::vector<std::optional<double>> winrate_preds;
  std::vector<double> winrate_labels;
};

const std::string& string_field(const nlohmann::json& row, const char* name,
                                std::size_t index) {
  auto it = row.find(name);
  if (it == row.end() || !it->is_string()) {
    throw ReportError("row " + std::to_string(index + 1) + ": missing string \"" +
                      name + "\"");
  }
  return it->get_ref<const std::string&>();
}

void add_row(TaskBucket& b, Task task, const std::string& answer,
             const std::string& prediction, const EvalOptions& options,
             std::size_t index) {
  const ParsedAnswer label = parse_answer(answer, task);
  if (!label.format_ok) {
    throw ReportError("row " + std::to_string(index + 1) +
                      ": ground-truth answer does not parse (" + label.reason +
                      ")");
  }
  const ParsedAnswer pred = parse_answer(prediction, task);
  ++b.n;
  if (!pred.format_ok) ++b.format_failures;
  switch (task) {
    case Task::DouProb:
    case Task::DouNoProb:
      b.action_preds.push_back(pred.format_ok ? pred.final_action : std::nullopt);
      b.action_labels.push_back(*label.final_action);
      if (task == Task::DouProb) {
        b.thought_preds.push_back(options.rlsum_full_answer ? prediction
                                                            : pred.thought_text);
        b.thought_labels.push_back(options.rlsum_full_answer ? answer
                                                             : label.thought_text);
      }
      break;
    case Task::DouPredProb:
      b.chain_preds.push_back(pred.format_ok ? pred.responses : std::nullopt);
      b.chain_labels.push_back(*label.responses);
      break;
    case Task::GoNextState:
      if (label.move) {
        b.move_preds.push_back(pred.format_ok ? pred.move : std::nullopt);
        b.move_labels.push_back(*label.move);
      } else {
        b.board_preds.push_back(prediction);
        b.board_labels.push_back(answer);
      }
      break;
    case Task::GoAnalysis:
      b.lead_preds.push_back(pred.lead);
      b.lead_labels.push_back(*label.lead);
      b.winrate_preds.push_back(pred.win_rate);
      b.winrate_labels.push_back(*label.win_rate);
      break;
    case Task::GoStateExpl:
      b.thought_preds.push_back(prediction);
      b.thought_labels.push_back(label.free_text);
      break;
  }
}

}  // namespace

nlohmann::json evaluate_rows(const std::vector<nlohmann::json>& rows,
                             const EvalOptions& options) {
  std::map<Task, TaskBucket> buckets;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_object()) {
      throw ReportError("row " + std::to_string(i + 1) + ": not an object");
    }
    const std::string& task_text = string_field(row, "task", i);
    const auto task = parse_task(task_text);
    if (!task) {
      throw ReportError("row " + std::to_string(i + 1) + ": unknown task " +
                        task_text);
    }
    add_row(buckets[*task], *task, string_field(row, "answer", i),
            string_field(row, "prediction", i), options, i);
  }

  nlohmann::json out = nlohmann::json::object();
  nlohmann::json per_task = nlohmann::json::object();
  for (const auto& [task, b] : buckets) {
    const std::string prefix = std::string(task_name(task)) + ".";
    switch (task) {
      case Task::DouProb:
        out[prefix + "cot_rlsum"] = mean_rl_sum(b.thought_preds, b.thought_labels);
        out[prefix + "action_acc"] = action_accuracy(b.action_preds, b.action_labels);
        break;
      case Task::DouNoProb:
        out[prefix + "action_acc"] = action_accuracy(b.action_preds, b.action_labels);
        break;
      case Task::DouPredProb:
        out[prefix + "pred_acc"] = pred_accuracy(b.chain_preds, b.chain_labels);
        break;
      case Task::GoNextState:
        if (!b.board_labels.empty()) {
          out[prefix + "s_prime_acc"] = s_prime_accuracy(b.board_preds, b.board_labels);
        }
        if (!b.move_labels.empty()) {
          out[prefix + "move_acc"] = action_accuracy(b.move_preds, b.move_labels);
        }
        break;
      case Task::GoAnalysis:
        out[prefix + "score_mae"] = score_mae(b.lead_preds, b.lead_labels);
        out[prefix + "winrate_mae"] = winrate_mae(b.winrate_preds, b.winrate_labels);
        break;
      case Task::GoStateExpl:
        out[prefix + "rlsum"] = mean_rl_sum(b.thought_preds, b.thought_labels);
        break;
    }
    per_task[std::string(task_name(task))] = {
        {"n", b.n}, {"format_failures", b.format_failures}};
  }
  out["n"] = rows.size();
  out["per_task"] = per_task;
  out["config"] = {{"rlsum_span", options.rlsum_full_answer ? "answer" : "thought"},
                   {"score_fallback", kScoreFallbackError},
                   {"winrate_fallback", kWinrateFallbackError}};
  return out;
}

std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReportError("cannot open " + path.string());
  std::vector<nlohmann::json> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      rows.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::parse_error& e) {
      throw ReportError(path.string() + ":" + std::to_string(number) + ": " +
                        e.what());
    }
  }
  return rows;
}

}  // namespace mastermind::evalkit
