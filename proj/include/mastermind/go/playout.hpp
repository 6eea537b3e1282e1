#pragma once

#include <cstdint>
#include <vector>

#include "mastermind/common/rng.hpp"
#include "mastermind/go/state.hpp"

namespace mastermind::go {

/// Mutable board for random playouts. Chains keep pseudo-liberty counts
/// with the sum and sum of squares of liberty positions, so a chain is in
/// atari exactly when count * sum_sq == sum * sum.
///
/// Playout rules: uniform choice among legal moves that do not fill one of
/// the mover's own eyes; pass only when no such move exists; simple ko only;
/// suicide illegal. Two passes or 3 * size^2 moves end the game.
class PlayoutBoard {
 public:
  explicit PlayoutBoard(const GoState& state);

  int size() const { return size_; }
  Color to_move() const { return to_move_; }

  /// Plays one random move for the side to move; returns false for a pass.
  bool play_random(Rng& rng);
  /// Plays to the end of the game.
  void run(Rng& rng);

  /// Area ownership per cell (GoState index order): +1 black stone or
  /// black-only territory, -1 white, 0 otherwise.
  std::vector<int> area_ownership() const;
  /// Black area minus white area.
  int area_difference() const;

  Color at(int index) const;

 private:
  enum Cell : std::uint8_t { kEmpty = 0, kBlack = 1, kWhite = 2, kWall = 3 };

  int vertex(int index) const;
  bool is_legal(int v, Cell c) const;
  bool is_own_eye(int v, Cell c) const;
  void place(int v, Cell c);
  void add_liberty(int chain, int v);
  void remove_liberty(int chain, int v);
  bool in_atari(int chain) const;
  int atari_liberty(int chain) const;
  void merge(int keep, int gone);
  int remove_chain(int chain);
  void remove_empty(int v);
  void add_empty(int v);

  int size_;
  int stride_;
  Color to_move_;
  std::vector<Cell> cells_;
  std::vector<int> chain_;      // head vertex of the chain per stone
  std::vector<int> next_;       // circular list through a chain
  std::vector<int> stones_;     // per head
  std::vector<int> libs_;       // per head, pseudo-liberties
  std::vector<std::int64_t> lib_sum_;
  std::vector<std::int64_t> lib_sq_;
  std::vector<int> empties_;
  std::vector<int> empty_pos_;
  int ko_ = -1;
  int passes_ = 0;
  int moves_ = 0;
  int move_cap_;
  std::vector<int> scratch_;
};

}  // namespace mastermind::go
