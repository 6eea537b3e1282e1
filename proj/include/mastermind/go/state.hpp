#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mastermind::go {

enum class Color : std::uint8_t { Empty = 0, Black = 1, White = 2 };

constexpr Color opposite(Color c) {
  return c == Color::Black ? Color::White
                           : (c == Color::White ? Color::Black : Color::Empty);
}
std::string_view color_name(Color c);  // "black", "white", "empty"
char color_letter(Color c);             // 'B' / 'W'

inline constexpr int kMinBoardSize = 2;
inline constexpr int kMaxBoardSize = 25;

/// 1-based board coordinate; row 1 is the bottom edge, column 1 is "A".
struct Point {
  int col = 1;
  int row = 1;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Column label with the customary gap: A..H, J..Z.
char column_letter(int col);
/// Inverse of column_letter; 0 for anything else.
int column_from_letter(char letter);
/// "D4", "T19".
std::string point_text(Point p);
/// Parses "D4"-style text (case-insensitive). nullopt when malformed or off
/// the board.
std::optional<Point> parse_point(std::string_view text, int size);

struct GoMove {
  Color color = Color::Black;
  std::optional<Point> point;  // nullopt = pass

  static GoMove play(Color c, Point p) { return GoMove{c, p}; }
  static GoMove pass(Color c) { return GoMove{c, std::nullopt}; }
  bool is_pass() const { return !point.has_value(); }
  friend bool operator==(const GoMove&, const GoMove&) = default;
};

/// "B D4", "W pass".
std::string move_text(const GoMove& move);

enum class KoRule : std::uint8_t { Simple, PositionalSuperko };

class GoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class Occupied : public GoError {
 public:
  using GoError::GoError;
};
class Suicide : public GoError {
 public:
  using GoError::GoError;
};
class KoViolation : public GoError {
 public:
  using GoError::GoError;
};
class OutOfBounds : public GoError {
 public:
  using GoError::GoError;
};

/// Immutable Go position. Stones placed with from_grid count as setup stones;
/// everything else arrives through apply_move.
class GoState {
 public:
  static GoState empty(int size = 19, KoRule rule = KoRule::PositionalSuperko);
  /// cells indexed by index_of; to_move is the side to play next.
  static GoState from_grid(int size, std::vector<Color> cells, Color to_move,
                           KoRule rule = KoRule::PositionalSuperko);

  int size() const { return size_; }
  int area() const { return size_ * size_; }
  int index_of(Point p) const { return (p.row - 1) * size_ + (p.col - 1); }
  Point point_of(int index) const {
    return Point{index % size_ + 1, index / size_ + 1};
  }
  bool on_board(Point p) const {
    return p.col >= 1 && p.col <= size_ && p.row >= 1 && p.row <= size_;
  }

  Color at(Point p) const { return cells_[index_of(p)]; }
  Color at(int index) const { return cells_[index]; }
  const std::vector<Color>& cells() const { return cells_; }
  Color to_move() const { return to_move_; }
  KoRule ko_rule() const { return ko_rule_; }
  const std::vector<GoMove>& history() const { return history_; }
  /// Stones of `c` that have been captured so far.
  int captured(Color c) const {
    return c == Color::Black ? captured_black_ : captured_white_;
  }
  int setup_stones() const { return setup_stones_; }
  int stones_on_board() const;
  /// Point where the side to move may not immediately recapture.
  std::optional<Point> ko_point() const;
  int consecutive_passes() const { return consecutive_passes_; }
  std::uint64_t position_hash() const { return hash_; }
  bool seen_position(std::uint64_t hash) const;

  /// Same position with every stone recolored and the side to move flipped.
  GoState color_swapped() const;

  /// Same stones and side to move, no history.
  bool same_board(const GoState& other) const {
    return size_ == other.size_ && cells_ == other.cells_;
  }

  friend bool operator==(const GoState&, const GoState&) = default;

 private:
  friend GoState apply_move(const GoState&, const GoMove&);

  int size_ = 19;
  std::vector<Color> cells_;
  Color to_move_ = Color::Black;
  KoRule ko_rule_ = KoRule::PositionalSuperko;
  std::vector<GoMove> history_;
  std::uint64_t hash_ = 0;
  std::uint64_t mirror_hash_ = 0;
  std::vector<std::uint64_t> seen_;         // sorted
  std::vector<std::uint64_t> mirror_seen_;  // sorted, colors swapped
  int captured_black_ = 0;
  int captured_white_ = 0;
  int setup_stones_ = 0;
  int ko_index_ = -1;
  Color ko_color_ = Color::Empty;  // side forbidden from playing ko_index_
  int consecutive_passes_ = 0;
};

/// Plays `move` (its color need not match to_move; afterwards the opponent of
/// the mover is to move). Throws OutOfBounds, Occupied, Suicide or
/// KoViolation.
GoState apply_move(const GoState& state, const GoMove& move);

/// Why `move` is illegal, or nullopt when it can be played.
std::optional<std::string> illegal_reason(const GoState& state,
                                          const GoMove& move);

/// Every legal placement for the side to move, in index order, then pass.
std::vector<GoMove> legal_moves(const GoState& state);

/// Orthogonal neighbours of a cell index.
int neighbours(int size, int index, int out[4]);

/// Stones of the chain containing `index` and its liberty count.
struct ChainInfo {
  std::vector<int> stones;
  int liberties = 0;
};
ChainInfo chain_at(const GoState& state, int index);

}  // namespace mastermind::go
