#include "doctest.h"
#include "mastermind/dou/state.hpp"
#include "support/oracles.hpp"

using namespace mastermind::dou;

namespace {
DouState two_seat(const char* a, const char* b) {
  return DouState::from_hands({parse_cards(a), parse_cards(b)}, 0, 0);
}
}  // namespace

TEST_CASE("legal actions match brute-force filtering of the action space") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const DouState s = oracle::random_dou_state(seed, static_cast<int>(seed % 25));
    const auto legal = legal_actions(s);
    REQUIRE(legal == oracle::legal_by_filter(s));
  }
}

TEST_CASE("leading never offers pass, following always does") {
  const DouState s = DouState::deal(3);
  const auto lead = legal_actions(s);
  CHECK_FALSE(lead.back().is_pass());
  const DouState after = apply_action(s, lead.front());
  CHECK(legal_actions(after).back().is_pass());
}

TEST_CASE("dominance clears after every other seat passes") {
  DouState s = DouState::from_hands(
      {parse_cards("3 4 5"), parse_cards("6 7"), parse_cards("8 9")}, 0, 0);
  s = apply_action(s, parse_action("3"));
  s = apply_action(s, Combo::pass());
  CHECK(s.dominant().has_value());
  s = apply_action(s, Combo::pass());
  CHECK_FALSE(s.dominant().has_value());
  CHECK(s.to_move() == 0);
  CHECK_FALSE(legal_actions(s).back().is_pass());
}

TEST_CASE("two seats: one pass hands the lead back") {
  DouState s = two_seat("12 14 17", "13 17 17");
  s = apply_action(s, parse_action("12"));
  s = apply_action(s, parse_action("17"));
  s = apply_action(s, Combo::pass());
  CHECK(s.to_move() == 1);
  CHECK_FALSE(s.dominant().has_value());
}

TEST_CASE("illegal actions name the rule") {
  DouState s = two_seat("3 4 5", "6 7");
  CHECK_THROWS_AS(apply_action(s, parse_action("9")), IllegalAction);
  CHECK_THROWS_AS(apply_action(s, Combo::pass()), IllegalAction);
  s = apply_action(s, parse_action("5"));
  CHECK_THROWS_AS(apply_action(s, parse_action("7 7")), IllegalAction);
  try {
    apply_action(s, parse_action("3"));
    FAIL("expected IllegalAction");
  } catch (const IllegalAction& e) {
    CHECK_FALSE(e.rule().empty());
  }
}

TEST_CASE("terminal state") {
  DouState s = two_seat("3", "4");
  s = apply_action(s, parse_action("3"));
  CHECK(is_terminal(s) == Side::Landlord);
  CHECK_THROWS_AS(legal_actions(s), TerminalState);
  CHECK_THROWS_AS(apply_action(s, Combo::pass()), TerminalState);
}

TEST_CASE("card conservation along random play") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    DouState s = DouState::deal(seed);
    CHECK(s.hand(0).size() == 20);
    CHECK(s.hand(1).size() == 17);
    CHECK(s.hand(2).size() == 17);
    std::mt19937_64 rng(seed);
    while (!is_terminal(s)) {
      const auto legal = legal_actions(s);
      s = apply_action(s, legal[rng() % legal.size()]);
      int held = 0;
      for (const auto& h : s.hands()) held += h.size();
      REQUIRE(held + s.cards_in_history() == s.initial_total());
    }
  }
}

TEST_CASE("deals are deterministic and use the whole deck") {
  CHECK(DouState::deal(9) == DouState::deal(9));
  CHECK_FALSE(DouState::deal(9) == DouState::deal(10));
  const DouState s = DouState::deal(9);
  Cards all;
  for (const auto& h : s.hands()) all += h;
  CHECK(all == Cards::full_deck());
}

TEST_CASE("from_hands rejects impossible decks") {
  CHECK_THROWS_AS(
      DouState::from_hands({parse_cards("3 3 3"), parse_cards("3 3")}, 0, 0),
      MultiplicityExceeded);
  CHECK_THROWS_AS(DouState::from_hands({parse_cards("3")}, 0, 0), InvalidDeal);
}
