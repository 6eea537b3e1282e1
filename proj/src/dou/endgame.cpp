#include <string>
#include <unordered_map>

#include "mastermind/dou/agents.hpp"

namespace mastermind::dou {

namespace {

std::string key_of(const DouState& s) {
  std::string key;
  key.reserve(3 * kNumRanks + 24);
  for (const Cards& h : s.hands()) {
    for (auto c : h.counts()) key += static_cast<char>(c);
  }
  key += static_cast<char>(s.to_move());
  key += static_cast<char>(s.consecutive_passes());
  if (s.dominant()) {
    const Combo& c = s.dominant()->combo;
    key += static_cast<char>(s.dominant()->seat);
    key += static_cast<char>(c.category());
    key += static_cast<char>(c.principal());
    key += static_cast<char>(c.length());
    for (auto n : c.cards().counts()) key += static_cast<char>(n);
  } else {
    key += '\xff';
  }
  return key;
}

class Solver {
 public:
  Side solve(const DouState& s) {
    if (auto w = is_terminal(s)) return *w;
    const std::string key = key_of(s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Side mine = s.side_of(s.to_move());
    Side result = mine == Side::Landlord ? Side::Farmers : Side::Landlord;
    std::vector<Combo> moves;
    legal_actions_unsorted(s, moves);
    for (const Combo& c : moves) {
      if (solve(apply_unchecked(s, c)) == mine) {
        result = mine;
        break;
      }
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  std::unordered_map<std::string, Side> memo_;
};

void check_solvable(const DouState& state, bool visible) {
  if (!visible) {
    throw std::invalid_argument("endgame solving needs visible hands");
  }
  int cards = 0;
  for (const Cards& h : state.hands()) cards += h.size();
  if (cards > kEndgameCardCap) {
    throw TooLarge(std::to_string(cards) + " cards in hand exceeds the cap of " +
                   std::to_string(kEndgameCardCap));
  }
}

}  // namespace

EndgameValue solve_endgame(const DouState& state, bool visible) {
  check_solvable(state, visible);
  Solver solver;
  EndgameValue v;
  v.winner = solver.solve(state);
  for (int s = 0; s < state.num_seats(); ++s) {
    v.seat_values.push_back(state.side_of(s) == v.winner ? 1 : -1);
  }
  return v;
}

std::vector<std::pair<Combo, int>> endgame_action_values(const DouState& state) {
  check_solvable(state, true);
  Solver solver;
  const Side mine = state.side_of(state.to_move());
  std::vector<std::pair<Combo, int>> out;
  for (const Combo& c : legal_actions(state)) {
    out.emplace_back(c, solver.solve(apply_unchecked(state, c)) == mine ? 1 : 0);
  }
  return out;
}

}  // namespace mastermind::dou
