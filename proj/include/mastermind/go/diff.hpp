#pragma once

#include <stdexcept>

#include "mastermind/go/state.hpp"

namespace mastermind::go {

class NotReachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The single move m with apply_move(before, m) reproducing `after`'s board.
/// Identical boards with the side to move flipped give a pass.
GoMove diff_states(const GoState& before, const GoState& after);

}  // namespace mastermind::go
