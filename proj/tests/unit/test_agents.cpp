#include <cmath>

#include "doctest.h"
#include "mastermind/dou/agents.hpp"
#include "support/appendix_d.hpp"
#include "support/oracles.hpp"

using namespace mastermind;
using namespace mastermind::dou;

namespace {

ScoredActions weights(std::initializer_list<std::pair<const char*, double>> list) {
  ScoredActions s;
  for (const auto& [text, w] : list) s.entries.emplace_back(parse_action(text), w);
  return s;
}

bridge::EngineEndpoint policy_endpoint(const std::string& mode) {
  auto ep = bridge::EngineEndpoint::subprocess({MM_MOCK_POLICY, "--mode", mode});
  ep.response_timeout_ms = 500;
  return ep;
}

}  // namespace

TEST_CASE("softmax and normalize") {
  const ScoredActions raw = weights({{"3", 0.0}, {"4", std::log(3.0)}});
  const ScoredActions p = raw.softmax();
  CHECK(p.normalized);
  CHECK(p.weight_of(parse_action("3")) == doctest::Approx(0.25));
  CHECK(p.weight_of(parse_action("4")) == doctest::Approx(0.75));
  const ScoredActions n = weights({{"3", 1.0}, {"4", 3.0}}).normalize();
  CHECK(n.weight_of(parse_action("4")) == doctest::Approx(0.75));
  const ScoredActions zero = weights({{"3", 0.0}, {"4", 0.0}}).normalize();
  CHECK(zero.weight_of(parse_action("3")) == doctest::Approx(0.5));
  CHECK_THROWS_AS(ScoredActions{}.softmax(), EmptyInput);
  CHECK_THROWS_AS(weights({{"3", -1.0}}).normalize(), std::invalid_argument);
}

TEST_CASE("argmax breaks ties canonically") {
  CHECK(weights({{"5", 1.0}, {"3", 1.0}, {"4", 0.5}}).argmax() == parse_action("3"));
}

TEST_CASE("top-p keeps the minimal prefix reaching p") {
  const ScoredActions p = weights({{"3", 0.1}, {"4", 0.5}, {"5", 0.3}, {"6", 0.1}});
  CHECK(top_p_filter(p, 0.25) == std::vector<Combo>{parse_action("4")});
  CHECK(top_p_filter(p, 0.5) == std::vector<Combo>{parse_action("4")});
  CHECK(top_p_filter(p, 0.8) ==
        std::vector<Combo>{parse_action("4"), parse_action("5")});
  const auto all = top_p_filter(p, 1.0);
  CHECK(all == std::vector<Combo>{parse_action("4"), parse_action("5"),
                                  parse_action("3"), parse_action("6")});
  CHECK_THROWS_AS(top_p_filter(p, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(top_p_filter(p, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(top_p_filter(ScoredActions{}, 0.5), EmptyInput);
  CHECK(kDouTopP == 0.25);
}

TEST_CASE("rule policy") {
  SUBCASE("leading plays the longest combo that keeps bombs") {
    const DouState s = DouState::from_hands(
        {parse_cards("3 4 5 6 7 9 9 9 9 13"), parse_cards("3 3"), parse_cards("4 4")},
        0, 0);
    CHECK(action_text(rule_policy(s)) == "3 4 5 6 7");
  }
  SUBCASE("following plays the lowest beating combo of the same shape") {
    DouState s = DouState::from_hands(
        {parse_cards("5 6"), parse_cards("8 10 12 12 12 12"), parse_cards("4 4")}, 0, 0);
    s = apply_action(s, parse_action("6"));
    CHECK(action_text(rule_policy(s)) == "8");
  }
  SUBCASE("a bomb only when nothing else beats") {
    DouState s = DouState::from_hands(
        {parse_cards("14 6"), parse_cards("8 12 12 12 12"), parse_cards("4 4")}, 0, 0);
    s = apply_action(s, parse_action("14"));
    CHECK(action_text(rule_policy(s)) == "12 12 12 12");
  }
  SUBCASE("pass when nothing beats") {
    DouState s = DouState::from_hands(
        {parse_cards("17 6"), parse_cards("8 9"), parse_cards("4 4")}, 0, 0);
    s = apply_action(s, parse_action("17"));
    CHECK(rule_policy(s).is_pass());
  }
}

TEST_CASE("scripted solo policies") {
  DouState s = appendix_d::start();
  s = apply_action(s, parse_action("12"));
  CHECK(action_text(smallest_solo_policy(s)) == "13");
  CHECK(action_text(largest_solo_policy(s)) == "17");
  const DouState beaten = apply_action(appendix_d::start(), parse_action("17"));
  CHECK(smallest_solo_policy(beaten).is_pass());
  CHECK(largest_solo_policy(beaten).is_pass());
}

TEST_CASE("best response against the scripted opponents") {
  const auto small = appendix_d::play(smallest_solo_policy);
  CHECK(small.faces == std::vector<std::string>{"Q", "K", "2", "PASS", "A"});
  CHECK(small.winner == Side::Landlord);
  const auto large = appendix_d::play(largest_solo_policy);
  CHECK(large.faces ==
        std::vector<std::string>{"Q", "2", "PASS", "2", "PASS", "K"});
  CHECK(large.winner == Side::Farmers);
}

TEST_CASE("endgame solver") {
  CHECK(solve_endgame(appendix_d::start()).winner == Side::Farmers);
  DouState easy = DouState::from_hands({parse_cards("3"), parse_cards("4 5")}, 0, 0);
  CHECK(solve_endgame(easy).winner == Side::Landlord);
  CHECK_THROWS_AS(solve_endgame(DouState::deal(1)), TooLarge);
  CHECK_THROWS_AS(solve_endgame(appendix_d::start(), false), std::invalid_argument);
  for (const auto& [action, value] : endgame_action_values(appendix_d::start())) {
    CHECK(value == 0);
  }
}

TEST_CASE("Monte Carlo policy") {
  const DouState s = oracle::random_dou_state(17, 4);
  const ScoredActions a = monte_carlo_policy(s, 200, 5);
  const ScoredActions b = monte_carlo_policy(s, 200, 5);
  REQUIRE(a.entries.size() == legal_actions(s).size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i] == b.entries[i]);
    CHECK(a.entries[i].second >= 0.0);
    CHECK(a.entries[i].second <= 1.0);
  }
  // A winning move is found when it exists.
  DouState end = DouState::from_hands(
      {parse_cards("14 14"), parse_cards("3 17"), parse_cards("4 6")}, 0, 0);
  Agent mc(AgentProfile::monte_carlo(50, 1));
  CHECK(action_text(mc.act(end)) == "14 14");
}

TEST_CASE("agent decisions are pure functions of profile and state") {
  const DouState s = oracle::random_dou_state(23, 6);
  Agent r1(AgentProfile::random(4));
  Agent r2(AgentProfile::random(4));
  CHECK(r1.act(s) == r2.act(s));
  const auto dist = r1.distribution(s);
  double total = 0.0;
  for (const auto& [c, w] : dist.entries) total += w;
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("profiles") {
  CHECK(AgentProfile::monte_carlo(2000, 1).describe() == "MONTE_CARLO(2000)");
  CHECK(AgentProfile::rule().describe() == "RULE");
  nlohmann::json j = AgentProfile::monte_carlo(300, 9);
  const auto back = j.get<AgentProfile>();
  CHECK(back.kind == AgentKind::MonteCarlo);
  CHECK(back.rollouts == 300);
  CHECK(back.seed == 9);
  CHECK(nlohmann::json("RANDOM").get<AgentProfile>().kind == AgentKind::Random);
  CHECK_THROWS(nlohmann::json("DOUZERO").get<AgentProfile>());
  AgentProfile bad = AgentProfile::rule();
  bad.kind = AgentKind::Oracle;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(AgentProfile::random(1).reseeded({2, 3}).seed !=
        AgentProfile::random(1).reseeded({2, 4}).seed);
}

TEST_CASE("predicted opponent responses") {
  const DouState s = DouState::deal(5);
  Agent rule(AgentProfile::rule());
  std::vector<Agent*> seats = {nullptr, &rule, &rule};
  const Combo lead = legal_actions(s).front();
  const auto r = predict_opponent_responses(s, lead, seats);
  REQUIRE(r.size() == 2);
  CHECK(r[0].seat == 1);
  CHECK(r[1].seat == 2);
  DouState after = apply_action(s, lead);
  CHECK(r[0].argmax == rule_policy(after));
  after = apply_action(after, r[0].argmax);
  CHECK(r[1].argmax == rule_policy(after));

  const DouState last = DouState::from_hands(
      {parse_cards("3"), parse_cards("4"), parse_cards("5")}, 0, 0);
  CHECK(predict_opponent_responses(last, parse_action("3"), seats).empty());
}

TEST_CASE("oracle agent through the policy protocol") {
  const DouState s = DouState::deal(8);
  Agent ok(AgentProfile::oracle(policy_endpoint("ok")));
  const auto legal = legal_actions(s);
  CHECK(ok.act(s) == legal.front());
  const auto dist = ok.distribution(s);
  CHECK(dist.entries.size() == legal.size());

  for (const char* mode : {"garbage", "unknown-action", "hang", "close"}) {
    CAPTURE(mode);
    Agent bad(AgentProfile::oracle(policy_endpoint(mode)));
    CHECK_THROWS_AS(bad.act(s), AgentFailure);
  }
}
