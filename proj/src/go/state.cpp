#include "mastermind/go/state.hpp"

#include <algorithm>
#include <cctype>

#include "mastermind/common/rng.hpp"

namespace mastermind::go {

namespace {

std::uint64_t stone_key(int index, Color c) {
  return splitmix64(0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1) +
                    static_cast<std::uint64_t>(c));
}

void insert_sorted(std::vector<std::uint64_t>& v, std::uint64_t h) {
  auto it = std::lower_bound(v.begin(), v.end(), h);
  if (it == v.end() || *it != h) v.insert(it, h);
}

// Flood fill over same-coloured stones. Returns the liberty count and leaves
// the chain in `stones`. `mark` is scratch sized to the board.
int flood_chain(int size, const std::vector<Color>& cells, int start,
                std::vector<int>& stones, std::vector<char>& mark) {
  const Color c = cells[start];
  stones.clear();
  stones.push_back(start);
  mark[start] = 1;
  std::vector<int> libs;
  int nb[4];
  for (std::size_t head = 0; head < stones.size(); ++head) {
    const int n = neighbours(size, stones[head], nb);
    for (int k = 0; k < n; ++k) {
      const int q = nb[k];
      if (mark[q]) continue;
      if (cells[q] == c) {
        mark[q] = 1;
        stones.push_back(q);
      } else if (cells[q] == Color::Empty) {
        mark[q] = 2;
        libs.push_back(q);
      }
    }
  }
  for (int s : stones) mark[s] = 0;
  for (int l : libs) mark[l] = 0;
  return static_cast<int>(libs.size());
}

struct Placement {
  std::vector<Color> cells;
  std::vector<int> captured;
  bool suicide = false;
};

Placement place(int size, const std::vector<Color>& before, int index,
                Color color) {
  Placement out{before, {}, false};
  out.cells[index] = color;
  std::vector<char> mark(before.size(), 0);
  std::vector<int> chain;
  int nb[4];
  const int n = neighbours(size, index, nb);
  for (int k = 0; k < n; ++k) {
    const int q = nb[k];
    if (out.cells[q] != opposite(color)) continue;
    if (flood_chain(size, out.cells, q, chain, mark) == 0) {
      for (int s : chain) {
        out.cells[s] = Color::Empty;
        out.captured.push_back(s);
      }
    }
  }
  if (out.captured.empty() &&
      flood_chain(size, out.cells, index, chain, mark) == 0) {
    out.suicide = true;
  }
  return out;
}

}  // namespace

std::string_view color_name(Color c) {
  switch (c) {
    case Color::Black:
      return "black";
    case Color::White:
      return "white";
    default:
      return "empty";
  }
}

char color_letter(Color c) { return c == Color::White ? 'W' : 'B'; }

char column_letter(int col) {
  char letter = static_cast<char>('A' + col - 1);
  return letter >= 'I' ? static_cast<char>(letter + 1) : letter;
}

int column_from_letter(char letter) {
  letter = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
  if (letter < 'A' || letter > 'Z' || letter == 'I') return 0;
  return letter < 'I' ? letter - 'A' + 1 : letter - 'A';
}

std::string point_text(Point p) {
  return std::string(1, column_letter(p.col)) + std::to_string(p.row);
}

std::optional<Point> parse_point(std::string_view text, int size) {
  if (text.size() < 2 || text.size() > 3) return std::nullopt;
  const int col = column_from_letter(text[0]);
  int row = 0;
  for (char ch : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    row = row * 10 + (ch - '0');
  }
  if (col < 1 || col > size || row < 1 || row > size) return std::nullopt;
  return Point{col, row};
}

std::string move_text(const GoMove& move) {
  std::string out(1, color_letter(move.color));
  out += ' ';
  out += move.is_pass() ? "pass" : point_text(*move.point);
  return out;
}

int neighbours(int size, int index, int out[4]) {
  const int col = index % size;
  const int row = index / size;
  int n = 0;
  if (col > 0) out[n++] = index - 1;
  if (col + 1 < size) out[n++] = index + 1;
  if (row > 0) out[n++] = index - size;
  if (row + 1 < size) out[n++] = index + size;
  return n;
}

ChainInfo chain_at(const GoState& state, int index) {
  ChainInfo info;
  if (state.at(index) == Color::Empty) return info;
  std::vector<char> mark(state.cells().size(), 0);
  info.liberties =
      flood_chain(state.size(), state.cells(), index, info.stones, mark);
  return info;
}

GoState GoState::empty(int size, KoRule rule) {
  return from_grid(size,
                   std::vector<Color>(static_cast<std::size_t>(size) * size,
                                      Color::Empty),
                   Color::Black, rule);
}

GoState GoState::from_grid(int size, std::vector<Color> cells, Color to_move,
                           KoRule rule) {
  if (size < kMinBoardSize || size > kMaxBoardSize) {
    throw GoError("board size " + std::to_string(size) + " not supported");
  }
  if (cells.size() != static_cast<std::size_t>(size) * size) {
    throw GoError("grid does not match board size");
  }
  if (to_move == Color::Empty) throw GoError("side to move must be a colour");
  GoState s;
  s.size_ = size;
  s.cells_ = std::move(cells);
  s.to_move_ = to_move;
  s.ko_rule_ = rule;
  std::vector<char> mark(s.cells_.size(), 0);
  std::vector<int> chain;
  for (int i = 0; i < s.area(); ++i) {
    if (s.cells_[i] == Color::Empty) continue;
    ++s.setup_stones_;
    s.hash_ ^= stone_key(i, s.cells_[i]);
    s.mirror_hash_ ^= stone_key(i, opposite(s.cells_[i]));
    if (flood_chain(size, s.cells_, i, chain, mark) == 0) {
      throw GoError("chain at " + point_text(s.point_of(i)) +
                    " has no liberties");
    }
  }
  s.seen_.push_back(s.hash_);
  s.mirror_seen_.push_back(s.mirror_hash_);
  return s;
}

int GoState::stones_on_board() const {
  return static_cast<int>(std::count_if(
      cells_.begin(), cells_.end(), [](Color c) { return c != Color::Empty; }));
}

std::optional<Point> GoState::ko_point() const {
  if (ko_index_ < 0 || ko_color_ != to_move_) return std::nullopt;
  return point_of(ko_index_);
}

bool GoState::seen_position(std::uint64_t hash) const {
  return std::binary_search(seen_.begin(), seen_.end(), hash);
}

GoState GoState::color_swapped() const {
  GoState s = *this;
  for (Color& c : s.cells_) c = opposite(c);
  s.to_move_ = opposite(to_move_);
  for (GoMove& m : s.history_) m.color = opposite(m.color);
  std::swap(s.hash_, s.mirror_hash_);
  std::swap(s.seen_, s.mirror_seen_);
  std::swap(s.captured_black_, s.captured_white_);
  s.ko_color_ = opposite(ko_color_);
  return s;
}

GoState apply_move(const GoState& state, const GoMove& move) {
  if (move.color == Color::Empty) throw GoError("move needs a colour");
  GoState next = state;
  next.history_.push_back(move);
  next.to_move_ = opposite(move.color);
  if (move.is_pass()) {
    ++next.consecutive_passes_;
    next.ko_index_ = -1;
    next.ko_color_ = Color::Empty;
    return next;
  }
  const Point p = *move.point;
  if (!state.on_board(p)) {
    throw OutOfBounds("point (" + std::to_string(p.col) + "," +
                      std::to_string(p.row) + ") is off the board");
  }
  const int index = state.index_of(p);
  if (state.cells_[index] != Color::Empty) {
    throw Occupied(point_text(p) + " is occupied");
  }
  if (state.ko_index_ == index && state.ko_color_ == move.color) {
    throw KoViolation(point_text(p) + " retakes the ko immediately");
  }
  Placement placed = place(state.size_, state.cells_, index, move.color);
  if (placed.suicide) throw Suicide(point_text(p) + " would be suicide");

  std::uint64_t hash = state.hash_ ^ stone_key(index, move.color);
  std::uint64_t mirror = state.mirror_hash_ ^ stone_key(index, opposite(move.color));
  for (int s : placed.captured) {
    hash ^= stone_key(s, opposite(move.color));
    mirror ^= stone_key(s, move.color);
  }
  if (state.ko_rule_ == KoRule::PositionalSuperko && state.seen_position(hash)) {
    throw KoViolation(point_text(p) + " repeats an earlier position");
  }

  next.cells_ = std::move(placed.cells);
  next.hash_ = hash;
  next.mirror_hash_ = mirror;
  insert_sorted(next.seen_, hash);
  insert_sorted(next.mirror_seen_, mirror);
  const int n_captured = static_cast<int>(placed.captured.size());
  if (move.color == Color::Black) {
    next.captured_white_ += n_captured;
  } else {
    next.captured_black_ += n_captured;
  }
  next.consecutive_passes_ = 0;
  next.ko_index_ = -1;
  next.ko_color_ = Color::Empty;
  if (n_captured == 1) {
    ChainInfo own = chain_at(next, index);
    if (own.stones.size() == 1 && own.liberties == 1) {
      next.ko_index_ = placed.captured.front();
      next.ko_color_ = opposite(move.color);
    }
  }
  return next;
}

std::optional<std::string> illegal_reason(const GoState& state,
                                          const GoMove& move) {
  try {
    apply_move(state, move);
  } catch (const GoError& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

std::vector<GoMove> legal_moves(const GoState& state) {
  std::vector<GoMove> out;
  const Color c = state.to_move();
  for (int i = 0; i < state.area(); ++i) {
    if (state.at(i) != Color::Empty) continue;
    const GoMove m = GoMove::play(c, state.point_of(i));
    if (!illegal_reason(state, m)) out.push_back(m);
  }
  out.push_back(GoMove::pass(c));
  return out;
}

}  // namespace mastermind::go
