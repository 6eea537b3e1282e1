#include "mastermind/datagen/templates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mastermind/common/text.hpp"
#include "mastermind/evalkit/answer.hpp"
#include "mastermind/go/codec.hpp"
#include "mastermind/go/diff.hpp"

namespace mastermind::datagen {

using evalkit::bracket;

std::string sample_line(const Sample& sample) {
  nlohmann::json j = {{"task", std::string(task_name(sample.task))},
                      {"question", sample.question},
                      {"answer", sample.answer},
                      {"meta", sample.meta}};
  return j.dump();
}

Sample sample_from_json(const nlohmann::json& j) {
  Sample s;
  const auto task = parse_task(j.at("task").get<std::string>());
  if (!task) throw std::invalid_argument("unknown task in sample");
  s.task = *task;
  s.question = j.at("question").get<std::string>();
  s.answer = j.at("answer").get<std::string>();
  if (j.contains("meta")) s.meta = j.at("meta");
  return s;
}

namespace {

std::string hand_text(const dou::Cards& cards) {
  return "[" + dou::encode_cards(cards) + "]";
}

std::string role_of(const dou::DouState& state, int seat) {
  return seat == state.landlord_seat() ? "landlord" : "farmer";
}

int responders(const dou::DouState& state) { return state.num_seats() - 1; }

std::vector<std::string> texts(const std::vector<dou::Combo>& combos) {
  std::vector<std::string> out;
  for (const auto& c : combos) out.push_back(dou::action_text(c));
  return out;
}

bool is_legal(const dou::DouState& state, const dou::Combo& combo) {
  if (dou::is_terminal(state)) return false;
  const auto legal = dou::legal_actions(state);
  return std::find(legal.begin(), legal.end(), combo) != legal.end();
}

// Replays `action` and then `replies`; the replies must be legal and stop
// exactly when the game ends or every following seat has answered.
void check_chain(const dou::DouState& state, const dou::Combo& action,
                 const std::vector<dou::Combo>& replies) {
  if (!is_legal(state, action)) {
    throw TemplateInvariantViolation("illegal action [" + dou::action_text(action) +
                                     "]");
  }
  dou::DouState s = dou::apply_unchecked(state, action);
  for (const auto& r : replies) {
    if (!is_legal(s, r)) {
      throw TemplateInvariantViolation("illegal reply [" + dou::action_text(r) +
                                       "] after [" + dou::action_text(action) +
                                       "]");
    }
    s = dou::apply_unchecked(s, r);
  }
  const bool ended = dou::is_terminal(s).has_value();
  const bool complete = static_cast<int>(replies.size()) == responders(state);
  if (!ended && !complete) {
    throw TemplateInvariantViolation("replies after [" + dou::action_text(action) +
                                     "] stop before the next seats have moved");
  }
}

std::string board_header(int size) {
  return std::to_string(size) + "x" + std::to_string(size) + " Go";
}

std::string move_phrase(const go::GoMove& move) {
  const std::string who(go::color_name(move.color));
  if (move.is_pass()) return "a pass by " + who;
  return "on " + go::point_text(*move.point) + " by " + who;
}

std::string capitalized(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(out[0]));
  return out;
}

constexpr std::string_view kBoardIntro = "Here is the board state:\n";
constexpr std::string_view kSecondBoardIntro =
    "Here is the board state after the next move:\n";
constexpr std::string_view kNextMoveIntro = "The next move is ";

}  // namespace

std::string dou_state_text(const dou::DouState& state) {
  const int me = state.to_move();
  std::ostringstream out;
  out << "I am the " << role_of(state, me) << " (seat " << me << "). ";
  out << "My handcards are " << hand_text(state.hand(me))
      << ", while the opponents' handcards are ";
  bool first = true;
  for (int k = 1; k < state.num_seats(); ++k) {
    const int seat = (me + k) % state.num_seats();
    if (!first) out << " and ";
    first = false;
    out << hand_text(state.hand(seat)) << " (seat " << seat << ", "
        << role_of(state, seat) << ")";
  }
  out << ". ";
  if (state.history().empty()) {
    out << "The play history is empty.";
  } else {
    out << "The play history is: ";
    for (std::size_t i = 0; i < state.history().size(); ++i) {
      const auto& play = state.history()[i];
      if (i > 0) out << "; ";
      out << "seat " << play.seat << " played "
          << bracket(dou::action_text(play.combo));
    }
    out << ".";
  }
  return out.str();
}

Sample build_dou_sample(const dou::DouState& state,
                        const std::vector<DouCandidate>& candidates,
                        const dou::Combo& chosen, bool with_prob) {
  if (candidates.empty()) {
    throw TemplateInvariantViolation("empty candidate list");
  }
  bool found = false;
  for (const auto& c : candidates) {
    check_chain(state, c.action, c.responses);
    if (c.action == chosen) found = true;
  }
  if (!found) {
    throw TemplateInvariantViolation("chosen action [" + dou::action_text(chosen) +
                                     "] is not a candidate");
  }
  Sample s;
  s.task = with_prob ? Task::DouProb : Task::DouNoProb;
  std::vector<std::string> listed;
  for (const auto& c : candidates) listed.push_back(bracket(dou::action_text(c.action)));
  s.question = dou_state_text(state) + " My possible actions are " +
               join(listed, ", ") + ".";
  if (with_prob) {
    for (const auto& c : candidates) {
      s.answer += evalkit::render_response_line(dou::action_text(c.action),
                                                texts(c.responses),
                                                responders(state));
      s.answer += '\n';
    }
  }
  s.answer += evalkit::render_final_line(dou::action_text(chosen));
  return s;
}

Sample build_dou_pred_sample(const dou::DouState& state,
                             const dou::Combo& action,
                             const std::vector<dou::Combo>& observed) {
  check_chain(state, action, observed);
  if (observed.empty()) {
    throw TemplateInvariantViolation("no reply to predict after [" +
                                     dou::action_text(action) + "]");
  }
  Sample s;
  s.task = Task::DouPredProb;
  s.question = dou_state_text(state) + " My action is " +
               bracket(dou::action_text(action)) + ".";
  s.answer = evalkit::render_prediction(texts(observed), responders(state));
  return s;
}

Sample build_go_next_state_sample(const go::GoState& state,
                                  const go::GoMove& move, int annotate_last_k) {
  const go::GoState after = go::apply_move(state, move);
  Sample s;
  s.task = Task::GoNextState;
  s.question = "The following is a game record of " + board_header(state.size()) +
               ". " + std::string(kBoardIntro) +
               go::serialize_board(state, annotate_last_k) +
               std::string(kNextMoveIntro) + move_phrase(move) +
               ". Please predict the next Go board after this move.";
  s.answer = go::serialize_board(after, annotate_last_k);
  return s;
}

Sample build_go_action_sample(const go::GoState& before,
                              const go::GoState& after, int annotate_last_k) {
  const go::GoMove move = go::diff_states(before, after);
  Sample s;
  s.task = Task::GoNextState;
  s.question = "The following is a game record of " +
               board_header(before.size()) + ". " + std::string(kBoardIntro) +
               go::serialize_board(before, annotate_last_k) +
               std::string(kSecondBoardIntro) +
               go::serialize_board(after, annotate_last_k) +
               "Please predict the move between the two boards.";
  s.answer = evalkit::render_move_answer(move);
  return s;
}

Sample build_go_analysis_sample(const go::GoState& state,
                                const go::PositionEval& eval) {
  const auto& own = eval.ownership;
  if (own.size != state.size() ||
      static_cast<int>(own.discrete.size()) != state.area()) {
    throw InconsistentEval("ownership grid is " + std::to_string(own.size) +
                           "x" + std::to_string(own.size) + " for a " +
                           std::to_string(state.size()) + "x" +
                           std::to_string(state.size()) + " board");
  }
  if (!(eval.win_rate >= 0.0 && eval.win_rate <= 1.0)) {
    throw InconsistentEval("win rate outside [0,1]");
  }
  const go::TerritoryCounts counts = go::count_territory(own);
  const double lead = go::score_lead(counts, eval.komi);
  if (!(std::abs(lead - eval.score_lead) <= 1e-9)) {
    throw InconsistentEval("lead " + format_number(eval.score_lead) +
                           " does not match the counted " + format_number(lead));
  }
  std::vector<go::Color> cells(own.discrete.size(), go::Color::Empty);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (own.discrete[i] == go::Owner::Black) cells[i] = go::Color::Black;
    if (own.discrete[i] == go::Owner::White) cells[i] = go::Color::White;
  }
  Sample s;
  s.task = Task::GoAnalysis;
  s.question = "The following is a game board of " + board_header(state.size()) +
               ". " + capitalized(go::color_name(state.to_move())) +
               " is to move with komi " + format_number(eval.komi) + ". " +
               std::string(kBoardIntro) + go::serialize_board(state) +
               "Please predict the ownership map, the leading score and the "
               "win rate.";
  s.answer = evalkit::render_analysis_answer(state.size(), cells, counts.black,
                                             counts.white, eval.komi,
                                             eval.win_rate);
  return s;
}

Sample build_go_expl_sample(const go::GoState& state,
                            const std::string& explanation) {
  if (trim(explanation).empty()) {
    throw std::invalid_argument("empty explanation");
  }
  Sample s;
  s.task = Task::GoStateExpl;
  s.question = "The following is a game board of " + board_header(state.size()) +
               ". " + capitalized(go::color_name(state.to_move())) +
               " is to move. " + std::string(kBoardIntro) +
               go::serialize_board(state, 1) +
               "Please generate the corresponding explanations.";
  s.answer = explanation;
  return s;
}

GoQuestion parse_go_question(const std::string& question) {
  GoQuestion q;
  auto grab = [&](std::size_t from) {
    std::string board;
    std::size_t pos = from;
    while (pos < question.size()) {
      const std::size_t end = question.find('\n', pos);
      if (end == std::string::npos) break;
      const char c = question[pos];
      if (c != ' ' && !(c >= '0' && c <= '9')) break;
      board.append(question, pos, end - pos + 1);
      pos = end + 1;
    }
    return std::make_pair(board, pos);
  };
  const std::size_t first = question.find(kBoardIntro);
  if (first == std::string::npos) {
    throw std::invalid_argument("question has no board");
  }
  auto [board, rest] = grab(first + kBoardIntro.size());
  q.board = board;
  if (question.compare(rest, kSecondBoardIntro.size(), kSecondBoardIntro) == 0) {
    q.second_board = grab(rest + kSecondBoardIntro.size()).first;
  }
  if (question.find(" Black is to move") != std::string::npos) {
    q.to_move = go::Color::Black;
  } else if (question.find(" White is to move") != std::string::npos) {
    q.to_move = go::Color::White;
  }
  if (question.compare(rest, kNextMoveIntro.size(), kNextMoveIntro) == 0) {
    const std::size_t stop = question.find('.', rest);
    const auto words = split_whitespace(std::string_view(question).substr(
        rest + kNextMoveIntro.size(), stop - rest - kNextMoveIntro.size()));
    // "on D4 by black" or "a pass by white"
    if (words.size() == 4 && words[2] == "by") {
      const go::Color c = words[3] == "white" ? go::Color::White : go::Color::Black;
      if (words[0] == "a") {
        q.move = go::GoMove::pass(c);
      } else if (auto p = go::parse_point(words[1], go::kMaxBoardSize)) {
        q.move = go::GoMove::play(c, *p);
      }
      if (q.move) q.to_move = c;
    }
  }
  return q;
}

}  // namespace mastermind::datagen
