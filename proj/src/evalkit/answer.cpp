#include "mastermind/evalkit/answer.hpp"

#include <cmath>

#include "mastermind/common/text.hpp"
#include "mastermind/dou/combo.hpp"

namespace mastermind::evalkit {

namespace {

constexpr std::string_view kIfPrefix = "If I play ";
constexpr std::string_view kFinalPrefix = "Therefore, I will play ";
constexpr std::string_view kOwnershipHeader = "Ownership map:";
constexpr std::string_view kCountPrefix = "Count(ownership) -> black ";
constexpr std::string_view kLeadPrefix = "Leading score for black: ";
constexpr std::string_view kWinPrefix = "Win rate for black: ";
constexpr std::string_view kMovePrefix = "The move is ";

std::string response_tail(const std::vector<std::string>& responses,
                          int responders) {
  if (responses.empty()) return "the game ends.";
  if (responders >= 2 && responses.size() >= 2) {
    return "the next two players will play " + bracket(responses[0]) + ", " +
           bracket(responses[1]) + ".";
  }
  std::string out = "the next player will play " + bracket(responses[0]);
  if (static_cast<int>(responses.size()) < responders) out += " and the game ends";
  return out + ".";
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.emplace_back(line);
    start = end + 1;
  }
  return out;
}

// Bracketed items in order; nullopt on unbalanced brackets.
std::optional<std::vector<std::string>> brackets_in(std::string_view text) {
  std::vector<std::string> items;
  std::size_t pos = 0;
  while (true) {
    const std::size_t open = text.find('[', pos);
    const std::size_t stray = text.find(']', pos);
    if (open == std::string_view::npos) {
      if (stray != std::string_view::npos) return std::nullopt;
      return items;
    }
    if (stray < open) return std::nullopt;
    const std::size_t close = text.find(']', open);
    if (close == std::string_view::npos) return std::nullopt;
    items.emplace_back(text.substr(open + 1, close - open - 1));
    pos = close + 1;
  }
}

std::optional<std::string> canonical_action(std::string_view text) {
  try {
    return dou::action_text(dou::parse_action(trim(text)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// The responses of a reasoning tail or a prediction sentence, when it
// matches one of the rendered forms exactly.
std::optional<std::vector<std::string>> parse_responses(std::string_view tail,
                                                        bool capitalized) {
  auto items = brackets_in(tail);
  if (!items || items->size() > 2) return std::nullopt;
  for (int responders : {2, 1}) {
    std::string expect = response_tail(*items, responders);
    if (capitalized) expect[0] = 'T';
    if (expect == tail) {
      std::vector<std::string> out;
      for (const auto& item : *items) {
        auto a = canonical_action(item);
        if (!a) return std::nullopt;
        out.push_back(*a);
      }
      return out;
    }
  }
  return std::nullopt;
}

void fail(ParsedAnswer& p, std::string_view reason) {
  if (p.format_ok || p.reason.empty()) p.reason = reason;
  p.format_ok = false;
}

void parse_dou_choice(ParsedAnswer& p, const std::vector<std::string>& lines) {
  std::vector<std::string_view> body;
  for (const auto& l : lines) {
    if (!trim(l).empty()) body.push_back(trim(l));
  }
  if (body.empty()) return fail(p, "empty");
  const std::string_view last = body.back();
  if (!starts_with(last, kFinalPrefix) || last.size() < kFinalPrefix.size() + 3 ||
      last.substr(last.size() - 2) != "].") {
    return fail(p, "final");
  }
  const std::string_view inner =
      last.substr(kFinalPrefix.size() + 1, last.size() - kFinalPrefix.size() - 3);
  if (last[kFinalPrefix.size()] != '[') return fail(p, "final");
  std::string thought;
  for (std::size_t i = 0; i + 1 < body.size(); ++i) {
    if (!thought.empty()) thought += '\n';
    thought += body[i];
  }
  p.thought_text = thought;
  p.format_ok = true;
  if (auto a = canonical_action(inner)) {
    p.final_action = *a;
  } else {
    fail(p, "action");
  }
  if (p.task != Task::DouProb) return;
  for (std::size_t i = 0; i + 1 < body.size(); ++i) {
    const std::string_view line = body[i];
    if (!starts_with(line, kIfPrefix) || line.size() <= kIfPrefix.size() ||
        line[kIfPrefix.size()] != '[') {
      return fail(p, "reasoning");
    }
    const std::size_t close = line.find("], ", kIfPrefix.size());
    if (close == std::string_view::npos) return fail(p, "reasoning");
    auto action = canonical_action(
        line.substr(kIfPrefix.size() + 1, close - kIfPrefix.size() - 1));
    auto responses = parse_responses(line.substr(close + 3), false);
    if (!action || !responses) return fail(p, "reasoning");
    p.reasoning.push_back(ReasoningLine{*action, *responses});
  }
  if (p.reasoning.empty() && body.size() == 1) fail(p, "reasoning");
}

void parse_prediction(ParsedAnswer& p, std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) return fail(p, "empty");
  if (auto r = parse_responses(t, true)) {
    p.responses = *r;
    p.format_ok = true;
  } else {
    fail(p, "prediction");
  }
}

void parse_next_state(ParsedAnswer& p, std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) return fail(p, "empty");
  if (starts_with(t, kMovePrefix)) {
    const auto words = split_whitespace(t.substr(kMovePrefix.size()));
    // "on D4 by black." or "a pass by white."
    if (words.size() != 4 || words[2] != "by" ||
        (words[3] != "black." && words[3] != "white.")) {
      return fail(p, "move");
    }
    const std::string color = words[3] == "black." ? "B" : "W";
    if (words[0] == "a" && words[1] == "pass") {
      p.move = color + " pass";
    } else if (words[0] == "on" && go::parse_point(words[1], go::kMaxBoardSize)) {
      p.move = color + " " + go::point_text(*go::parse_point(words[1], go::kMaxBoardSize));
    } else {
      return fail(p, "move");
    }
    p.format_ok = true;
    return;
  }
  try {
    p.board = go::parse_grid(text);
    p.format_ok = true;
  } catch (const std::exception&) {
    fail(p, "board");
  }
}

void parse_analysis(ParsedAnswer& p, const std::vector<std::string>& lines) {
  std::size_t i = 0;
  while (i < lines.size() && trim(lines[i]) != kOwnershipHeader) ++i;
  if (i == lines.size()) return fail(p, "ownership");
  std::size_t count_at = i + 1;
  while (count_at < lines.size() && !starts_with(trim(lines[count_at]), "Count(")) {
    ++count_at;
  }
  std::string grid;
  for (std::size_t k = i + 1; k < count_at; ++k) grid += lines[k] + "\n";
  p.format_ok = true;
  try {
    p.ownership = go::parse_grid(grid);
  } catch (const std::exception&) {
    fail(p, "ownership");
  }
  auto line_with = [&](std::string_view prefix) -> std::optional<std::string_view> {
    for (std::size_t k = count_at; k < lines.size(); ++k) {
      const std::string_view t = trim(lines[k]);
      if (starts_with(t, prefix)) return t.substr(prefix.size());
    }
    return std::nullopt;
  };
  if (auto c = line_with(kCountPrefix)) {
    const std::size_t comma = c->find(", white ");
    long long b = 0, w = 0;
    if (comma != std::string_view::npos && parse_int(c->substr(0, comma), b) &&
        parse_int(c->substr(comma + 8), w) && b >= 0 && w >= 0) {
      p.count_black = static_cast<int>(b);
      p.count_white = static_cast<int>(w);
    } else {
      fail(p, "count");
    }
  } else {
    fail(p, "count");
  }
  if (auto l = line_with(kLeadPrefix)) {
    const std::size_t eq = l->rfind('=');
    double v = 0.0;
    if (eq != std::string_view::npos && parse_number(trim(l->substr(eq + 1)), v)) {
      p.lead = v;
    } else {
      fail(p, "lead");
    }
  } else {
    fail(p, "lead");
  }
  if (auto w = line_with(kWinPrefix)) {
    double v = 0.0;
    if (parse_number(trim(*w), v) && v >= 0.0 && v <= 1.0) {
      p.win_rate = v;
    } else {
      fail(p, "winrate");
    }
  } else {
    fail(p, "winrate");
  }
  std::string thought;
  for (std::size_t k = i; k < lines.size() && k <= count_at; ++k) {
    thought += lines[k];
    thought += '\n';
  }
  p.thought_text = thought;
}

}  // namespace

std::string bracket(std::string_view action_text) {
  return "[" + std::string(action_text.empty() ? "pass" : action_text) + "]";
}

std::string render_response_line(std::string_view action,
                                 const std::vector<std::string>& responses,
                                 int responders) {
  return std::string(kIfPrefix) + bracket(action) + ", " +
         response_tail(responses, responders);
}

std::string render_final_line(std::string_view action) {
  return std::string(kFinalPrefix) + bracket(action) + ".";
}

std::string render_prediction(const std::vector<std::string>& responses,
                              int responders) {
  std::string out = response_tail(responses, responders);
  out[0] = 'T';
  return out;
}

std::string render_move_answer(const go::GoMove& move) {
  const std::string who = move.color == go::Color::White ? "white" : "black";
  if (move.is_pass()) return std::string(kMovePrefix) + "a pass by " + who + ".";
  return std::string(kMovePrefix) + "on " + go::point_text(*move.point) + " by " +
         who + ".";
}

double round_win_rate(double w) { return std::round(w * 10000.0) / 10000.0; }

std::string render_analysis_answer(int size,
                                   const std::vector<go::Color>& ownership,
                                   int black, int white, double komi,
                                   double win_rate) {
  std::string out(kOwnershipHeader);
  out += '\n';
  out += go::serialize_grid(size, ownership);
  out += std::string(kCountPrefix) + std::to_string(black) + ", white " +
         std::to_string(white) + "\n";
  const double lead = static_cast<double>(black) - white - komi;
  out += std::string(kLeadPrefix) + std::to_string(black) + " - " +
         std::to_string(white) + " - " + format_number(komi) + " = " +
         format_signed(lead) + "\n";
  out += std::string(kWinPrefix) + format_number(round_win_rate(win_rate));
  return out;
}

ParsedAnswer parse_answer(std::string_view text, Task task) {
  ParsedAnswer p;
  p.task = task;
  try {
    const auto lines = split_lines(text);
    switch (task) {
      case Task::DouProb:
      case Task::DouNoProb:
        parse_dou_choice(p, lines);
        break;
      case Task::DouPredProb:
        parse_prediction(p, text);
        break;
      case Task::GoNextState:
        parse_next_state(p, text);
        break;
      case Task::GoAnalysis:
        parse_analysis(p, lines);
        break;
      case Task::GoStateExpl:
        p.free_text = std::string(trim(text));
        p.format_ok = !p.free_text.empty();
        if (!p.format_ok) p.reason = "empty";
        break;
    }
  } catch (const std::exception&) {
    p.format_ok = false;
    if (p.reason.empty()) p.reason = "internal";
  }
  return p;
}

}  // namespace mastermind::evalkit
