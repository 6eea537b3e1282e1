#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mastermind/go/state.hpp"

namespace mastermind::go {

class SgfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public SgfError {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class IllegalMoveInRecord : public SgfError {
 public:
  IllegalMoveInRecord(int move_number, const std::string& why);
  /// 1-based index of the offending move in the main line.
  int move_number() const { return move_number_; }

 private:
  int move_number_;
};

struct SgfStep {
  GoState before;
  GoMove move;
  GoState after;
  /// C[] text of the node that carries the move; it annotates `after`.
  std::string comment;
};

struct SgfRecord {
  int size = 19;
  double komi = 0.0;
  std::string root_comment;
  /// The position before the first move (root AB/AW stones included).
  GoState initial;
  std::vector<SgfStep> steps;
};

/// Main line only: at every branch the first variation is followed. Reads
/// SZ, KM, AB, AW, B, W and C; other properties are ignored.
SgfRecord load_sgf(std::string_view bytes,
                   KoRule rule = KoRule::PositionalSuperko);

}  // namespace mastermind::go
