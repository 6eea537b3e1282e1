#pragma once

// Test-side reference implementations, written without the engine's
// generators so they can serve as independent oracles.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mastermind/dou/action_space.hpp"
#include "mastermind/dou/state.hpp"
#include "mastermind/go/state.hpp"

namespace oracle {

using namespace mastermind;

inline bool is_bomb(const dou::Combo& c) {
  return c.category() == dou::Category::Bomb;
}
inline bool is_rocket(const dou::Combo& c) {
  return c.category() == dou::Category::Rocket;
}

// Dominance straight from the rules of the game.
inline bool dominates(const dou::Combo& a, const dou::Combo& d) {
  if (is_rocket(d)) return false;
  if (is_rocket(a)) return true;
  if (is_bomb(a) && !is_bomb(d)) return true;
  if (is_bomb(d) && !is_bomb(a)) return false;
  return a.category() == d.category() && a.length() == d.length() &&
         a.size() == d.size() && a.principal() > d.principal();
}

// Every combo of the full action space that the mover holds and that beats
// the combo on the table, plus pass when following.
inline std::vector<dou::Combo> legal_by_filter(const dou::DouState& s) {
  std::vector<dou::Combo> out;
  const dou::Cards& hand = s.hand(s.to_move());
  for (const dou::Combo& c : dou::enumerate_all_actions()) {
    if (c.is_pass()) continue;
    if (!hand.contains(c.cards())) continue;
    if (s.dominant() && !dominates(c, s.dominant()->combo)) continue;
    out.push_back(c);
  }
  if (s.dominant()) out.push_back(dou::Combo::pass());
  return out;
}

// A position reached by `plies` uniformly random legal moves from a deal.
inline dou::DouState random_dou_state(std::uint64_t seed, int plies) {
  std::mt19937_64 rng(seed);
  dou::DouState s = dou::DouState::deal(seed, static_cast<int>(seed % 3));
  for (int i = 0; i < plies && !dou::is_terminal(s); ++i) {
    const auto legal = dou::legal_actions(s);
    auto next = dou::apply_action(
        s, legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)]);
    if (dou::is_terminal(next)) break;
    s = next;
  }
  return s;
}

// Flood fill over a raw grid (row-major, row 1 first).
struct FloodBoard {
  int size;
  std::vector<go::Color> cells;

  std::vector<int> adjacent(int i) const {
    std::vector<int> out;
    const int r = i / size, c = i % size;
    if (r > 0) out.push_back(i - size);
    if (r + 1 < size) out.push_back(i + size);
    if (c > 0) out.push_back(i - 1);
    if (c + 1 < size) out.push_back(i + 1);
    return out;
  }

  // Stones of the group at i and whether it has any liberty.
  std::pair<std::vector<int>, bool> group(int i) const {
    std::vector<int> stones{i};
    std::vector<char> seen(cells.size(), 0);
    seen[i] = 1;
    bool liberty = false;
    for (std::size_t k = 0; k < stones.size(); ++k) {
      for (int n : adjacent(stones[k])) {
        if (cells[n] == go::Color::Empty) liberty = true;
        if (cells[n] == cells[i] && !seen[n]) {
          seen[n] = 1;
          stones.push_back(n);
        }
      }
    }
    return {stones, liberty};
  }
};

struct PlayResult {
  std::vector<go::Color> cells;
  int captured = 0;
  bool suicide = false;
};

// Placement with capture of liberty-less enemy groups, then the suicide
// check. Ko is not considered.
inline PlayResult play_by_flood_fill(int size, std::vector<go::Color> cells,
                                     int index, go::Color color) {
  FloodBoard b{size, std::move(cells)};
  b.cells[index] = color;
  PlayResult r;
  for (int n : b.adjacent(index)) {
    if (b.cells[n] != go::opposite(color)) continue;
    auto [stones, liberty] = b.group(n);
    if (liberty) continue;
    for (int s : stones) {
      if (b.cells[s] != go::Color::Empty) {
        b.cells[s] = go::Color::Empty;
        ++r.captured;
      }
    }
  }
  r.suicide = !b.group(index).second;
  r.cells = std::move(b.cells);
  return r;
}

// A position reached by random non-suicidal placements and occasional
// passes.
inline go::GoState random_go_state(std::uint64_t seed, int size, int moves) {
  std::mt19937_64 rng(seed);
  go::GoState s = go::GoState::empty(size);
  for (int m = 0; m < moves; ++m) {
    std::vector<go::GoMove> legal = go::legal_moves(s);
    const auto& pick =
        legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)];
    s = go::apply_move(s, pick);
  }
  return s;
}

}  // namespace oracle
