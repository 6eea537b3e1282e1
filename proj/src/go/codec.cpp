#include "mastermind/go/codec.hpp"

#include <algorithm>
#include <optional>

#include "mastermind/common/text.hpp"

namespace mastermind::go {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  while (!lines.empty() && trim(lines.front()).empty()) {
    lines.erase(lines.begin());
  }
  return lines;
}

struct Cell {
  Color color = Color::Empty;
  std::optional<int> number;
};

Cell parse_cell(std::string_view token) {
  Cell cell;
  std::string_view symbol = token;
  const auto open = token.find('(');
  if (open != std::string_view::npos) {
    if (token.back() != ')') {
      throw BadSymbol("bad annotation '" + std::string(token) + "'");
    }
    long long n = 0;
    if (!parse_int(token.substr(open + 1, token.size() - open - 2), n) ||
        n < 1) {
      throw BadSymbol("bad move number in '" + std::string(token) + "'");
    }
    cell.number = static_cast<int>(n);
    symbol = token.substr(0, open);
  }
  if (symbol == kBlackSymbol) {
    cell.color = Color::Black;
  } else if (symbol == kWhiteSymbol) {
    cell.color = Color::White;
  } else if (symbol == kEmptySymbol && !cell.number) {
    cell.color = Color::Empty;
  } else {
    throw BadSymbol("unknown board symbol '" + std::string(token) + "'");
  }
  return cell;
}

}  // namespace

std::vector<Annotation> recent_annotations(const GoState& state, int k) {
  const auto& history = state.history();
  const int n = static_cast<int>(history.size());
  k = std::clamp(k, 0, n);
  std::vector<int> black_number(n), white_number(n);
  int blacks = 0, whites = 0;
  for (int i = 0; i < n; ++i) {
    if (history[i].is_pass()) continue;
    if (history[i].color == Color::Black) {
      black_number[i] = ++blacks;
    } else {
      white_number[i] = ++whites;
    }
  }
  std::vector<Annotation> out;
  std::vector<int> claimed;
  for (int i = n - 1; i >= n - k; --i) {
    const GoMove& m = history[i];
    if (m.is_pass()) continue;
    const int index = state.index_of(*m.point);
    if (std::find(claimed.begin(), claimed.end(), index) != claimed.end()) {
      continue;
    }
    claimed.push_back(index);
    if (state.at(index) != m.color) continue;
    const int number =
        m.color == Color::Black ? black_number[i] : white_number[i];
    out.push_back(Annotation{*m.point, m.color, number});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

std::string render(int size, const std::vector<Color>& cells,
                   const std::vector<int>& number) {
  std::string out = "  ";
  for (int col = 1; col <= size; ++col) {
    out += ' ';
    out += column_letter(col);
  }
  out += '\n';
  for (int row = size; row >= 1; --row) {
    if (row < 10) out += ' ';
    out += std::to_string(row);
    for (int col = 1; col <= size; ++col) {
      const int index = (row - 1) * size + (col - 1);
      out += ' ';
      switch (cells[index]) {
        case Color::Black:
          out += kBlackSymbol;
          break;
        case Color::White:
          out += kWhiteSymbol;
          break;
        default:
          out += kEmptySymbol;
      }
      if (!number.empty() && number[index] > 0) {
        out += '(' + std::to_string(number[index]) + ')';
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string serialize_grid(int size, const std::vector<Color>& cells) {
  if (cells.size() != static_cast<std::size_t>(size) * size) {
    throw RaggedGrid("cell count does not match board size");
  }
  return render(size, cells, {});
}

std::string serialize_board(const GoState& state, int annotate_last_k) {
  std::vector<int> number(state.area(), 0);
  for (const Annotation& a : recent_annotations(state, annotate_last_k)) {
    number[state.index_of(a.point)] = a.number;
  }
  return render(state.size(), state.cells(), number);
}

Grid parse_grid(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw RaggedGrid("board text is empty");
  const auto header = split_whitespace(lines.front());
  const int size = static_cast<int>(header.size());
  if (size < kMinBoardSize || size > kMaxBoardSize) {
    throw RaggedGrid("header names " + std::to_string(size) + " columns");
  }
  for (int col = 1; col <= size; ++col) {
    if (header[col - 1].size() != 1 ||
        header[col - 1][0] != column_letter(col)) {
      throw CoordinateMismatch("column " + std::to_string(col) +
                               " is labelled '" +
                               std::string(header[col - 1]) + "'");
    }
  }
  if (static_cast<int>(lines.size()) != size + 1) {
    throw RaggedGrid("expected " + std::to_string(size) + " rows, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Color> cells(static_cast<std::size_t>(size) * size,
                           Color::Empty);
  std::vector<Annotation> annotations;
  for (int r = 0; r < size; ++r) {
    const int row = size - r;
    const auto tokens = split_whitespace(lines[r + 1]);
    if (static_cast<int>(tokens.size()) != size + 1) {
      throw RaggedGrid("row " + std::to_string(row) + " has " +
                       std::to_string(tokens.size() - (tokens.empty() ? 0 : 1)) +
                       " cells, expected " + std::to_string(size));
    }
    long long label = 0;
    if (!parse_int(tokens.front(), label) || label != row) {
      throw CoordinateMismatch("row labelled '" + std::string(tokens.front()) +
                               "' where " + std::to_string(row) +
                               " was expected");
    }
    for (int col = 1; col <= size; ++col) {
      const Cell cell = parse_cell(tokens[col]);
      const Point p{col, row};
      cells[static_cast<std::size_t>(row - 1) * size + (col - 1)] = cell.color;
      if (cell.number) annotations.push_back(Annotation{p, cell.color, *cell.number});
    }
  }
  return Grid{size, std::move(cells), std::move(annotations)};
}

ParsedBoard parse_board(std::string_view text, Color to_move, KoRule rule) {
  Grid grid = parse_grid(text);
  try {
    return ParsedBoard{
        GoState::from_grid(grid.size, std::move(grid.cells), to_move, rule),
        std::move(grid.annotations)};
  } catch (const GoError& e) {
    throw BadSymbol(std::string("impossible position: ") + e.what());
  }
}

}  // namespace mastermind::go
