#include "mastermind/go/diff.hpp"

namespace mastermind::go {

GoMove diff_states(const GoState& before, const GoState& after) {
  if (before.size() != after.size()) {
    throw NotReachable("board sizes differ");
  }
  if (before.same_board(after)) {
    if (before.to_move() == after.to_move()) {
      throw NotReachable("boards are identical and nobody passed");
    }
    return GoMove::pass(before.to_move());
  }
  int added = -1;
  for (int i = 0; i < before.area(); ++i) {
    if (before.at(i) != Color::Empty || after.at(i) == Color::Empty) continue;
    if (added >= 0) throw NotReachable("more than one stone was added");
    added = i;
  }
  if (added < 0) throw NotReachable("no stone was added");
  const GoMove move = GoMove::play(after.at(added), before.point_of(added));
  GoState replay;
  try {
    replay = apply_move(before, move);
  } catch (const GoError& e) {
    throw NotReachable(move_text(move) + " is not legal: " + e.what());
  }
  if (!replay.same_board(after)) {
    throw NotReachable(move_text(move) + " does not produce the second board");
  }
  return move;
}

}  // namespace mastermind::go
