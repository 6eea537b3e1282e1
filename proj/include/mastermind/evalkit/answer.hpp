#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mastermind/common/task.hpp"
#include "mastermind/go/codec.hpp"

namespace mastermind::evalkit {

// Answer grammar shared by the dataset templates and the parser. Actions are
// written in brackets with the card codec: "[3 3]", "[pass]".
//
//   If I play [a], the next two players will play [x], [y].
//   If I play [a], the next player will play [x].            (two seats)
//   If I play [a], the next player will play [x] and the game ends.
//   If I play [a], the game ends.
//   Therefore, I will play [a].
//
//   The next two players will play [x], [y].                 (prediction)
//
//   The move is on D4 by black.  /  The move is a pass by white.
//
//   Ownership map:
//   <grid>
//   Count(ownership) -> black 10, white 5
//   Leading score for black: 10 - 5 - 0 = +5
//   Win rate for black: 0.875

std::string bracket(std::string_view action_text);

/// `responders` is the number of seats after the mover (1 or 2). Fewer
/// responses than responders means the game ended.
std::string render_response_line(std::string_view action,
                                 const std::vector<std::string>& responses,
                                 int responders);
std::string render_final_line(std::string_view action);
std::string render_prediction(const std::vector<std::string>& responses,
                              int responders);
std::string render_move_answer(const go::GoMove& move);
std::string render_analysis_answer(int size,
                                   const std::vector<go::Color>& ownership,
                                   int black, int white, double komi,
                                   double win_rate);
/// Win rates are written with at most four decimals.
double round_win_rate(double w);

struct ReasoningLine {
  std::string action;  // canonical action text
  std::vector<std::string> responses;
};

struct ParsedAnswer {
  Task task = Task::DouProb;
  bool format_ok = false;
  /// Which part failed: "final", "action", "reasoning", "prediction",
  /// "board", "move", "ownership", "count", "lead", "winrate", "empty".
  std::string reason;
  /// Text before the concluding line (Doudizhu) or before the first number
  /// (analysis); empty when there is none.
  std::string thought_text;

  std::optional<std::string> final_action;
  std::vector<ReasoningLine> reasoning;
  std::optional<std::vector<std::string>> responses;

  std::optional<go::Grid> board;
  std::optional<std::string> move;  // "B D4" / "W pass"

  std::optional<go::Grid> ownership;
  std::optional<int> count_black;
  std::optional<int> count_white;
  std::optional<double> lead;
  std::optional<double> win_rate;

  std::string free_text;
};

/// Total: never throws, whatever the input.
ParsedAnswer parse_answer(std::string_view text, Task task);

}  // namespace mastermind::evalkit
