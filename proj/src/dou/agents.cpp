#include "mastermind/dou/agents.hpp"

#include <algorithm>

#include "mastermind/bridge/errors.hpp"
#include "mastermind/bridge/policy.hpp"
#include "mastermind/common/rng.hpp"

namespace mastermind::dou {

namespace {

constexpr std::pair<AgentKind, std::string_view> kKindNames[] = {
    {AgentKind::Rule, "RULE"},
    {AgentKind::Random, "RANDOM"},
    {AgentKind::MonteCarlo, "MONTE_CARLO"},
    {AgentKind::Oracle, "ORACLE"},
    {AgentKind::SmallestSolo, "SMALLEST_SOLO"},
    {AgentKind::LargestSolo, "LARGEST_SOLO"},
};

std::uint64_t decision_seed(const AgentProfile& p, const DouState& s) {
  return derive_seed(p.seed, {static_cast<std::uint64_t>(s.history().size()),
                              static_cast<std::uint64_t>(s.to_move())});
}

bool keeps_bombs(const Cards& hand, const Combo& c) {
  if (c.category() == Category::Bomb || c.category() == Category::Rocket) {
    return true;
  }
  for (int r = 0; r < kBlackJoker; ++r) {
    const int used = c.cards().count(r);
    if (hand.count(r) == 4 && used > 0) return false;
  }
  const bool rocket_in_hand =
      hand.count(kBlackJoker) == 1 && hand.count(kRedJoker) == 1;
  const int jokers = c.cards().count(kBlackJoker) + c.cards().count(kRedJoker);
  return !(rocket_in_hand && jokers == 1);
}

ScoredActions single(const Combo& c) {
  ScoredActions s;
  s.entries.emplace_back(c, 1.0);
  return s;
}

Combo solo_policy(const DouState& state, bool smallest) {
  const std::vector<Combo> legal = legal_actions(state);
  const Combo* best = nullptr;
  for (const Combo& c : legal) {
    if (c.category() != Category::Solo) continue;
    if (!best || (smallest ? c.principal() < best->principal()
                           : c.principal() > best->principal())) {
      best = &c;
    }
  }
  if (best) return *best;
  if (state.dominant()) return Combo::pass();
  return legal.front();
}

}  // namespace

std::string_view kind_name(AgentKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "UNKNOWN";
}

AgentKind parse_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  throw std::invalid_argument("unknown agent kind '" + std::string(text) + "'");
}

AgentProfile AgentProfile::random(std::uint64_t seed) {
  AgentProfile p;
  p.kind = AgentKind::Random;
  p.seed = seed;
  return p;
}

AgentProfile AgentProfile::monte_carlo(int rollouts, std::uint64_t seed) {
  AgentProfile p;
  p.kind = AgentKind::MonteCarlo;
  p.rollouts = rollouts;
  p.seed = seed;
  return p;
}

AgentProfile AgentProfile::oracle(bridge::EngineEndpoint endpoint) {
  AgentProfile p;
  p.kind = AgentKind::Oracle;
  p.endpoint = std::move(endpoint);
  return p;
}

AgentProfile AgentProfile::scripted(AgentKind kind) {
  AgentProfile p;
  p.kind = kind;
  return p;
}

void AgentProfile::validate() const {
  if (rollouts < 1) throw std::invalid_argument("rollout count must be >= 1");
  if (kind == AgentKind::Oracle) {
    if (!endpoint) throw std::invalid_argument("ORACLE agent needs an endpoint");
    endpoint->validate();
  }
}

std::string AgentProfile::describe() const {
  std::string out(kind_name(kind));
  if (kind == AgentKind::MonteCarlo) {
    out += "(" + std::to_string(rollouts) + (visible ? ",visible)" : ")");
  } else if (kind == AgentKind::Oracle && endpoint) {
    out += "(" + endpoint->describe() + ")";
  }
  return out;
}

AgentProfile AgentProfile::reseeded(
    std::initializer_list<std::uint64_t> path) const {
  AgentProfile p = *this;
  p.seed = derive_seed(seed, path);
  return p;
}

void to_json(nlohmann::json& j, const AgentProfile& p) {
  j = nlohmann::json{{"kind", kind_name(p.kind)}, {"seed", p.seed}};
  if (p.kind == AgentKind::MonteCarlo) {
    j["rollouts"] = p.rollouts;
    j["visible"] = p.visible;
  }
  if (p.endpoint) j["endpoint"] = *p.endpoint;
}

void from_json(const nlohmann::json& j, AgentProfile& p) {
  p = AgentProfile{};
  if (j.is_string()) {
    p.kind = parse_kind(j.get<std::string>());
    return;
  }
  p.kind = parse_kind(j.at("kind").get<std::string>());
  p.rollouts = j.value("rollouts", p.rollouts);
  p.visible = j.value("visible", false);
  p.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("endpoint")) {
    p.endpoint = j.at("endpoint").get<bridge::EngineEndpoint>();
  }
  p.validate();
}

Agent::Agent(AgentProfile profile) : profile_(std::move(profile)) {
  profile_.validate();
}
Agent::~Agent() = default;
Agent::Agent(Agent&&) noexcept = default;
Agent& Agent::operator=(Agent&&) noexcept = default;

ScoredActions Agent::score(const DouState& state) {
  switch (profile_.kind) {
    case AgentKind::Rule:
      return single(rule_policy(state));
    case AgentKind::SmallestSolo:
      return single(smallest_solo_policy(state));
    case AgentKind::LargestSolo:
      return single(largest_solo_policy(state));
    case AgentKind::Random: {
      ScoredActions s;
      for (const Combo& c : legal_actions(state)) s.entries.emplace_back(c, 1.0);
      return s;
    }
    case AgentKind::MonteCarlo:
      return monte_carlo_policy(state, profile_.rollouts,
                                decision_seed(profile_, state),
                                profile_.visible);
    case AgentKind::Oracle:
      try {
        if (!client_) {
          client_ = std::make_unique<bridge::PolicyClient>(*profile_.endpoint);
        }
        return client_->query(state);
      } catch (const bridge::BridgeError& e) {
        client_.reset();
        throw AgentFailure(profile_.describe() + ": " + e.what());
      }
  }
  throw std::logic_error("unhandled agent kind");
}

ScoredActions Agent::distribution(const DouState& state) {
  ScoredActions raw = score(state);
  switch (profile_.kind) {
    case AgentKind::MonteCarlo:
      return raw.softmax(kMonteCarloTemperature);
    case AgentKind::Oracle:
      return raw.softmax(kOracleTemperature);
    default:
      return raw.normalize();
  }
}

Combo Agent::act(const DouState& state) {
  switch (profile_.kind) {
    case AgentKind::Rule:
      return rule_policy(state);
    case AgentKind::SmallestSolo:
      return smallest_solo_policy(state);
    case AgentKind::LargestSolo:
      return largest_solo_policy(state);
    case AgentKind::Random: {
      const std::vector<Combo> legal = legal_actions(state);
      Rng rng(decision_seed(profile_, state));
      return legal[uniform_index(rng, legal.size())];
    }
    case AgentKind::MonteCarlo: {
      const std::vector<Combo> legal = legal_actions(state);
      if (legal.size() == 1) return legal.front();
      return score(state).argmax();
    }
    case AgentKind::Oracle:
      return score(state).argmax();
  }
  throw std::logic_error("unhandled agent kind");
}

Combo rule_policy(const DouState& state) {
  const std::vector<Combo> legal = legal_actions(state);
  const Cards& hand = state.hand(state.to_move());
  if (!state.dominant()) {
    const Combo* best = nullptr;
    for (int pass = 0; pass < 2 && !best; ++pass) {
      for (const Combo& c : legal) {
        if (pass == 0 && !keeps_bombs(hand, c)) continue;
        // legal is in canonical order, so strict comparisons keep the
        // canonically first among equals.
        if (!best || c.size() > best->size() ||
            (c.size() == best->size() && c.principal() < best->principal())) {
          best = &c;
        }
      }
    }
    return *best;
  }
  const Combo& dominant = state.dominant()->combo;
  const Combo* best = nullptr;
  if (dominant.category() != Category::Bomb &&
      dominant.category() != Category::Rocket) {
    for (const Combo& c : legal) {
      if (c.category() != dominant.category() || !keeps_bombs(hand, c)) continue;
      if (!best || c.principal() < best->principal()) best = &c;
    }
    if (best) return *best;
  }
  for (const Combo& c : legal) {
    if (c.category() == Category::Bomb &&
        (!best || c.principal() < best->principal())) {
      best = &c;
    }
  }
  if (best) return *best;
  for (const Combo& c : legal) {
    if (c.category() == Category::Rocket) return c;
  }
  return Combo::pass();
}

Combo smallest_solo_policy(const DouState& state) {
  return solo_policy(state, true);
}

Combo largest_solo_policy(const DouState& state) {
  return solo_policy(state, false);
}

std::vector<PredictedResponse> predict_opponent_responses(
    const DouState& state, const Combo& action,
    const std::vector<Agent*>& seat_agents) {
  if (static_cast<int>(seat_agents.size()) != state.num_seats()) {
    throw std::invalid_argument("need one agent slot per seat");
  }
  std::vector<PredictedResponse> out;
  DouState s = apply_action(state, action);
  for (int k = 1; k < state.num_seats(); ++k) {
    if (is_terminal(s)) break;
    Agent* agent = seat_agents[s.to_move()];
    if (!agent) throw std::invalid_argument("no agent for a responding seat");
    PredictedResponse r;
    r.seat = s.to_move();
    r.scores = agent->distribution(s);
    r.argmax = r.scores.argmax();
    s = apply_action(s, r.argmax);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace mastermind::dou
