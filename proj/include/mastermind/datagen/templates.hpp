#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mastermind/common/task.hpp"
#include "mastermind/dou/state.hpp"
#include "mastermind/go/eval.hpp"
#include "mastermind/go/state.hpp"

namespace mastermind::datagen {

inline constexpr int kTemplateVersion = 1;
inline constexpr int kCodecVersion = 1;

struct Sample {
  Task task = Task::DouProb;
  std::string question;
  std::string answer;
  nlohmann::json meta = nlohmann::json::object();
};

/// {"task","question","answer","meta"} on one line.
std::string sample_line(const Sample& sample);
Sample sample_from_json(const nlohmann::json& j);

class TemplateInvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class InconsistentEval : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One possible action and the argmax replies of the following seats. Fewer
/// replies than following seats means the game ended on the way.
struct DouCandidate {
  dou::Combo action;
  std::vector<dou::Combo> responses;
};

/// Role, hands and history from the mover's seat.
std::string dou_state_text(const dou::DouState& state);

/// DOU_PROB when with_prob, DOU_NO_PROB otherwise.
Sample build_dou_sample(const dou::DouState& state,
                        const std::vector<DouCandidate>& candidates,
                        const dou::Combo& chosen, bool with_prob);

/// `observed` holds the actions actually played by the following seats.
Sample build_dou_pred_sample(const dou::DouState& state,
                             const dou::Combo& action,
                             const std::vector<dou::Combo>& observed);

Sample build_go_next_state_sample(const go::GoState& state,
                                  const go::GoMove& move, int annotate_last_k);
Sample build_go_action_sample(const go::GoState& before,
                              const go::GoState& after, int annotate_last_k);
Sample build_go_analysis_sample(const go::GoState& state,
                                const go::PositionEval& eval);
/// Throws std::invalid_argument for an empty explanation.
Sample build_go_expl_sample(const go::GoState& state,
                            const std::string& explanation);

/// The board embedded in a question (the first one for two-board
/// questions) and the announced move, if any.
struct GoQuestion {
  std::string board;
  std::string second_board;
  std::optional<go::GoMove> move;
  go::Color to_move = go::Color::Black;
};
GoQuestion parse_go_question(const std::string& question);

}  // namespace mastermind::datagen
