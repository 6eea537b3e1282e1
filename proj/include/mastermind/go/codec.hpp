#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mastermind/go/state.hpp"

namespace mastermind::go {

// Board text, one line per row from the top edge down:
//
//      A B C D E
//    5 • • • • •
//    4 • o(1) • • •
//    3 • • #(2) • •
//    2 • • • • •
//    1 • # • • •
//
// "#" black, "o" white, "•" empty. A stone played by one of the last k moves
// carries its per-colour move number in parentheses. Lines end with LF.

inline constexpr std::string_view kBlackSymbol = "#";
inline constexpr std::string_view kWhiteSymbol = "o";
inline constexpr std::string_view kEmptySymbol = "\xe2\x80\xa2";  // U+2022

class BoardParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class BadSymbol : public BoardParseError {
 public:
  using BoardParseError::BoardParseError;
};
class RaggedGrid : public BoardParseError {
 public:
  using BoardParseError::BoardParseError;
};
class CoordinateMismatch : public BoardParseError {
 public:
  using BoardParseError::BoardParseError;
};

struct Annotation {
  Point point;
  Color color = Color::Black;
  int number = 0;  // per-colour move number
  friend bool operator==(const Annotation&, const Annotation&) = default;
};

/// Annotations for the last `k` moves whose stones are still on the board.
std::vector<Annotation> recent_annotations(const GoState& state, int k);

std::string serialize_board(const GoState& state, int annotate_last_k = 0);

/// A bare grid of cells in GoState index order, with no legality check.
/// Ownership maps use the same text form.
struct Grid {
  int size = 0;
  std::vector<Color> cells;
  std::vector<Annotation> annotations;
};

std::string serialize_grid(int size, const std::vector<Color>& cells);
/// Throws BadSymbol, RaggedGrid or CoordinateMismatch.
Grid parse_grid(std::string_view text);

struct ParsedBoard {
  GoState state;
  std::vector<Annotation> annotations;
};

/// Inverse of serialize_board. The text does not record the side to move or
/// the history, so both come from the caller.
ParsedBoard parse_board(std::string_view text, Color to_move = Color::Black,
                        KoRule rule = KoRule::PositionalSuperko);

}  // namespace mastermind::go
