#pragma once

// The two-player three-card endgame: Q A 2 against K 2 2, first player to
// move. "Me" answers a known deterministic opponent with a best response:
// the first action in canonical order that still forces a win, or the first
// legal action when none does.

#include <functional>
#include <string>
#include <vector>

#include "mastermind/dou/agents.hpp"
#include "mastermind/dou/state.hpp"

namespace appendix_d {

using namespace mastermind::dou;

inline DouState start() {
  return DouState::from_hands({parse_cards("12 14 17"), parse_cards("13 17 17")},
                              0, 0);
}

using Policy = std::function<Combo(const DouState&)>;

inline bool forced_win(const DouState& s, const Policy& opponent) {
  if (auto w = is_terminal(s)) return *w == Side::Landlord;
  if (s.to_move() == 1) return forced_win(apply_action(s, opponent(s)), opponent);
  for (const Combo& a : legal_actions(s)) {
    if (forced_win(apply_action(s, a), opponent)) return true;
  }
  return false;
}

inline Combo best_response(const DouState& s, const Policy& opponent) {
  const auto legal = legal_actions(s);
  for (const Combo& a : legal) {
    if (forced_win(apply_action(s, a), opponent)) return a;
  }
  return legal.front();
}

struct Playout {
  std::vector<std::string> faces;  // "Q", "K", "PASS", ...
  Side winner = Side::Landlord;
};

inline Playout play(const Policy& opponent) {
  Playout out;
  DouState s = start();
  while (!is_terminal(s)) {
    const Combo a = s.to_move() == 0 ? best_response(s, opponent) : opponent(s);
    out.faces.push_back(a.is_pass() ? std::string("PASS")
                                    : std::string(rank_face(a.principal())));
    s = apply_action(s, a);
  }
  out.winner = *is_terminal(s);
  return out;
}

}  // namespace appendix_d
