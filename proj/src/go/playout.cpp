#include "mastermind/go/playout.hpp"

#include <utility>

namespace mastermind::go {

PlayoutBoard::PlayoutBoard(const GoState& state)
    : size_(state.size()),
      stride_(state.size() + 2),
      to_move_(state.to_move()),
      move_cap_(3 * state.size() * state.size()) {
  const int total = stride_ * stride_;
  cells_.assign(total, kWall);
  chain_.assign(total, 0);
  next_.assign(total, 0);
  stones_.assign(total, 0);
  libs_.assign(total, 0);
  lib_sum_.assign(total, 0);
  lib_sq_.assign(total, 0);
  empty_pos_.assign(total, -1);
  for (int i = 0; i < state.area(); ++i) {
    const int v = vertex(i);
    const Color c = state.at(i);
    cells_[v] = c == Color::Black ? kBlack : (c == Color::White ? kWhite : kEmpty);
    if (cells_[v] == kEmpty) {
      add_empty(v);
    } else {
      chain_[v] = v;
      next_[v] = v;
      stones_[v] = 1;
    }
  }
  for (int i = 0; i < state.area(); ++i) {
    const int v = vertex(i);
    if (cells_[v] == kEmpty) continue;
    for (int n : {v - 1, v + 1, v - stride_, v + stride_}) {
      if (cells_[n] == kEmpty) add_liberty(chain_[v], n);
    }
  }
  for (int i = 0; i < state.area(); ++i) {
    const int v = vertex(i);
    if (cells_[v] != kBlack && cells_[v] != kWhite) continue;
    for (int n : {v + 1, v + stride_}) {
      if (cells_[n] == cells_[v] && chain_[n] != chain_[v]) {
        int a = chain_[v], b = chain_[n];
        if (stones_[a] < stones_[b]) std::swap(a, b);
        merge(a, b);
      }
    }
  }
  if (auto ko = state.ko_point()) ko_ = vertex(state.index_of(*ko));
  passes_ = state.consecutive_passes();
}

int PlayoutBoard::vertex(int index) const {
  return (index / size_ + 1) * stride_ + (index % size_ + 1);
}

Color PlayoutBoard::at(int index) const {
  switch (cells_[vertex(index)]) {
    case kBlack:
      return Color::Black;
    case kWhite:
      return Color::White;
    default:
      return Color::Empty;
  }
}

void PlayoutBoard::add_empty(int v) {
  empty_pos_[v] = static_cast<int>(empties_.size());
  empties_.push_back(v);
}

void PlayoutBoard::remove_empty(int v) {
  const int pos = empty_pos_[v];
  const int last = empties_.back();
  empties_[pos] = last;
  empty_pos_[last] = pos;
  empties_.pop_back();
  empty_pos_[v] = -1;
}

void PlayoutBoard::add_liberty(int chain, int v) {
  ++libs_[chain];
  lib_sum_[chain] += v;
  lib_sq_[chain] += static_cast<std::int64_t>(v) * v;
}

void PlayoutBoard::remove_liberty(int chain, int v) {
  --libs_[chain];
  lib_sum_[chain] -= v;
  lib_sq_[chain] -= static_cast<std::int64_t>(v) * v;
}

bool PlayoutBoard::in_atari(int chain) const {
  return libs_[chain] > 0 &&
         libs_[chain] * lib_sq_[chain] == lib_sum_[chain] * lib_sum_[chain];
}

int PlayoutBoard::atari_liberty(int chain) const {
  return static_cast<int>(lib_sum_[chain] / libs_[chain]);
}

void PlayoutBoard::merge(int keep, int gone) {
  int v = gone;
  do {
    chain_[v] = keep;
    v = next_[v];
  } while (v != gone);
  std::swap(next_[keep], next_[gone]);
  stones_[keep] += stones_[gone];
  libs_[keep] += libs_[gone];
  lib_sum_[keep] += lib_sum_[gone];
  lib_sq_[keep] += lib_sq_[gone];
}

int PlayoutBoard::remove_chain(int chain) {
  scratch_.clear();
  int v = chain;
  do {
    scratch_.push_back(v);
    v = next_[v];
  } while (v != chain);
  for (int s : scratch_) {
    cells_[s] = kEmpty;
    add_empty(s);
  }
  for (int s : scratch_) {
    for (int n : {s - 1, s + 1, s - stride_, s + stride_}) {
      if (cells_[n] == kBlack || cells_[n] == kWhite) add_liberty(chain_[n], s);
    }
  }
  return static_cast<int>(scratch_.size());
}

bool PlayoutBoard::is_legal(int v, Cell c) const {
  if (cells_[v] != kEmpty || v == ko_) return false;
  for (int n : {v - 1, v + 1, v - stride_, v + stride_}) {
    const Cell nc = cells_[n];
    if (nc == kEmpty) return true;
    if (nc == kWall) continue;
    const int ch = chain_[n];
    if (nc == c) {
      if (!in_atari(ch) || atari_liberty(ch) != v) return true;
    } else if (in_atari(ch)) {
      return true;
    }
  }
  return false;
}

bool PlayoutBoard::is_own_eye(int v, Cell c) const {
  for (int n : {v - 1, v + 1, v - stride_, v + stride_}) {
    if (cells_[n] != c && cells_[n] != kWall) return false;
  }
  int opponent = 0;
  int walls = 0;
  for (int d : {v - stride_ - 1, v - stride_ + 1, v + stride_ - 1,
                v + stride_ + 1}) {
    if (cells_[d] == kWall) {
      walls = 1;
    } else if (cells_[d] != c && cells_[d] != kEmpty) {
      ++opponent;
    }
  }
  return opponent + walls < 2;
}

void PlayoutBoard::place(int v, Cell c) {
  remove_empty(v);
  cells_[v] = c;
  chain_[v] = v;
  next_[v] = v;
  stones_[v] = 1;
  libs_[v] = 0;
  lib_sum_[v] = 0;
  lib_sq_[v] = 0;
  const int around[4] = {v - 1, v + 1, v - stride_, v + stride_};
  for (int n : around) {
    if (cells_[n] == kEmpty) {
      add_liberty(v, n);
    } else if (cells_[n] != kWall) {
      remove_liberty(chain_[n], v);
    }
  }
  for (int n : around) {
    if (cells_[n] == c && chain_[n] != chain_[v]) {
      int a = chain_[v], b = chain_[n];
      if (stones_[a] < stones_[b]) std::swap(a, b);
      merge(a, b);
    }
  }
  const Cell enemy = c == kBlack ? kWhite : kBlack;
  int captured = 0;
  int captured_at = -1;
  for (int n : around) {
    if (cells_[n] == enemy && libs_[chain_[n]] == 0) {
      captured += remove_chain(chain_[n]);
      captured_at = n;
    }
  }
  const int own = chain_[v];
  ko_ = (captured == 1 && stones_[own] == 1 && libs_[own] == 1) ? captured_at
                                                                 : -1;
}

bool PlayoutBoard::play_random(Rng& rng) {
  const Cell c = to_move_ == Color::Black ? kBlack : kWhite;
  auto usable = [&](int v) { return is_legal(v, c) && !is_own_eye(v, c); };
  int chosen = -1;
  const std::size_t n = empties_.size();
  for (std::size_t attempt = 0; attempt < 8 && n > 0; ++attempt) {
    const int v = empties_[uniform_index(rng, n)];
    if (usable(v)) {
      chosen = v;
      break;
    }
  }
  if (chosen < 0 && n > 0) {
    scratch_.clear();
    for (int v : empties_) {
      if (usable(v)) scratch_.push_back(v);
    }
    if (!scratch_.empty()) chosen = scratch_[uniform_index(rng, scratch_.size())];
  }
  ++moves_;
  to_move_ = opposite(to_move_);
  if (chosen < 0) {
    ++passes_;
    ko_ = -1;
    return false;
  }
  passes_ = 0;
  place(chosen, c);
  return true;
}

void PlayoutBoard::run(Rng& rng) {
  while (passes_ < 2 && moves_ < move_cap_) play_random(rng);
}

std::vector<int> PlayoutBoard::area_ownership() const {
  std::vector<int> owner(static_cast<std::size_t>(size_) * size_, 0);
  std::vector<char> seen(cells_.size(), 0);
  std::vector<int> region;
  for (int i = 0; i < size_ * size_; ++i) {
    const int v = vertex(i);
    if (cells_[v] == kBlack) {
      owner[i] = 1;
    } else if (cells_[v] == kWhite) {
      owner[i] = -1;
    } else if (!seen[v]) {
      region.assign(1, v);
      seen[v] = 1;
      bool touches_black = false, touches_white = false;
      for (std::size_t h = 0; h < region.size(); ++h) {
        const int r = region[h];
        for (int n : {r - 1, r + 1, r - stride_, r + stride_}) {
          if (cells_[n] == kBlack) {
            touches_black = true;
          } else if (cells_[n] == kWhite) {
            touches_white = true;
          } else if (cells_[n] == kEmpty && !seen[n]) {
            seen[n] = 1;
            region.push_back(n);
          }
        }
      }
      const int value = touches_black == touches_white ? 0 : (touches_black ? 1 : -1);
      for (int r : region) {
        const int col = r % stride_ - 1;
        const int row = r / stride_ - 1;
        owner[row * size_ + col] = value;
      }
    }
  }
  return owner;
}

int PlayoutBoard::area_difference() const {
  int total = 0;
  for (int v : area_ownership()) total += v;
  return total;
}

}  // namespace mastermind::go
