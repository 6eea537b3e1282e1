#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace mastermind {

/// The six dataset families.
enum class Task {
  DouProb,
  DouNoProb,
  DouPredProb,
  GoNextState,
  GoAnalysis,
  GoStateExpl,
};

inline constexpr std::array<Task, 6> kAllTasks = {
    Task::DouProb,     Task::DouNoProb,  Task::DouPredProb,
    Task::GoNextState, Task::GoAnalysis, Task::GoStateExpl};

constexpr std::string_view task_name(Task t) {
  switch (t) {
    case Task::DouProb:
      return "DOU_PROB";
    case Task::DouNoProb:
      return "DOU_NO_PROB";
    case Task::DouPredProb:
      return "DOU_PRED_PROB";
    case Task::GoNextState:
      return "GO_NEXT_STATE";
    case Task::GoAnalysis:
      return "GO_ANALYSIS";
    case Task::GoStateExpl:
      return "GO_STATE_EXPL";
  }
  return "";
}

constexpr std::optional<Task> parse_task(std::string_view name) {
  for (Task t : kAllTasks) {
    if (task_name(t) == name) return t;
  }
  return std::nullopt;
}

constexpr bool is_dou_task(Task t) {
  return t == Task::DouProb || t == Task::DouNoProb || t == Task::DouPredProb;
}

}  // namespace mastermind
