#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mastermind/bridge/endpoint.hpp"
#include "mastermind/dou/scored_actions.hpp"
#include "mastermind/dou/state.hpp"

namespace mastermind::bridge {
class PolicyClient;
}

namespace mastermind::dou {

/// Agent families. SmallestSolo and LargestSolo are the two scripted
/// opponents of the classic three-card endgame: they play their smallest
/// (largest) single card that is legal and pass otherwise.
enum class AgentKind {
  Rule,
  Random,
  MonteCarlo,
  Oracle,
  SmallestSolo,
  LargestSolo
};

std::string_view kind_name(AgentKind kind);
AgentKind parse_kind(std::string_view text);

class AgentFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AgentProfile {
  AgentKind kind = AgentKind::Rule;
  /// Monte Carlo playouts per decision, shared round-robin by the legal
  /// actions.
  int rollouts = 200;
  /// Monte Carlo only: play out with the true hidden hands instead of
  /// sampled ones.
  bool visible = false;
  std::uint64_t seed = 0;
  /// Oracle only.
  std::optional<bridge::EngineEndpoint> endpoint;

  static AgentProfile rule() { return {}; }
  static AgentProfile random(std::uint64_t seed);
  static AgentProfile monte_carlo(int rollouts, std::uint64_t seed);
  static AgentProfile oracle(bridge::EngineEndpoint endpoint);
  static AgentProfile scripted(AgentKind kind);

  /// Throws std::invalid_argument.
  void validate() const;
  /// "RULE", "MONTE_CARLO(2000)", ...
  std::string describe() const;
  /// Same profile with its seed replaced by derive_seed(seed, path).
  AgentProfile reseeded(std::initializer_list<std::uint64_t> path) const;
};

void to_json(nlohmann::json& j, const AgentProfile& p);
void from_json(const nlohmann::json& j, AgentProfile& p);

/// Softmax temperatures used to turn raw weights into probabilities.
inline constexpr double kOracleTemperature = 1.0;
inline constexpr double kMonteCarloTemperature = 0.1;

/// A playing agent. Decisions are pure functions of (profile, state); the
/// only mutable member is the oracle connection.
class Agent {
 public:
  explicit Agent(AgentProfile profile);
  ~Agent();
  Agent(Agent&&) noexcept;
  Agent& operator=(Agent&&) noexcept;

  const AgentProfile& profile() const { return profile_; }

  /// Raw per-action weights: 1.0 on the chosen action for deterministic
  /// kinds, uniform for Random, win fractions for Monte Carlo, logits for
  /// Oracle.
  ScoredActions score(const DouState& state);
  /// score() turned into a probability distribution.
  ScoredActions distribution(const DouState& state);
  /// The action this agent plays. Throws AgentFailure when an oracle fails.
  Combo act(const DouState& state);

 private:
  AgentProfile profile_;
  std::unique_ptr<bridge::PolicyClient> client_;
};

/// Deterministic heuristic. Leading: the longest combo that keeps every bomb
/// and the rocket intact, ties by lowest principal rank. Following: the
/// lowest same-shape combo that beats the dominant one without breaking a
/// bomb, else the smallest beating bomb, else the rocket, else pass.
Combo rule_policy(const DouState& state);

/// Smallest / largest legal SOLO, or pass (or the first legal action when
/// neither exists and passing is not allowed).
Combo smallest_solo_policy(const DouState& state);
Combo largest_solo_policy(const DouState& state);

/// Win fraction of each legal action for the mover's side. Playout i belongs
/// to action i mod k and uses derive_seed(seed, {i}); every action gets at
/// least one playout. Hidden hands are re-dealt uniformly from the unseen
/// cards unless `visible`.
ScoredActions monte_carlo_policy(const DouState& state, int n_rollouts,
                                 std::uint64_t seed, bool visible = false);

class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kEndgameCardCap = 10;

/// Winner of the position under perfect play by both sides, by exhaustive
/// search with memoisation. Requires visible == true and at most
/// kEndgameCardCap cards in hand overall (TooLarge otherwise).
struct EndgameValue {
  Side winner = Side::Landlord;
  /// +1 for seats on the winning side, -1 otherwise.
  std::vector<int> seat_values;
};
EndgameValue solve_endgame(const DouState& state, bool visible = true);

/// For every legal action: 1 if the mover's side still wins with best play
/// afterwards, 0 otherwise.
std::vector<std::pair<Combo, int>> endgame_action_values(const DouState& state);

/// For each of the next seats (two in the three-seat game), the scores of
/// that seat's agent on the state reached after `action` and the earlier
/// seats' argmax responses. `seat_agents` is indexed by seat; the mover's
/// entry is not used. Stops early if the game ends.
struct PredictedResponse {
  int seat = 0;
  ScoredActions scores;  // normalized
  Combo argmax;
};
std::vector<PredictedResponse> predict_opponent_responses(
    const DouState& state, const Combo& action,
    const std::vector<Agent*>& seat_agents);

}  // namespace mastermind::dou
