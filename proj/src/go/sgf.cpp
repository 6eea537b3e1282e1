#include "mastermind/go/sgf.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

#include "mastermind/common/text.hpp"

namespace mastermind::go {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : SgfError("SGF parse error at byte " + std::to_string(offset) + ": " +
               what),
      offset_(offset) {}

IllegalMoveInRecord::IllegalMoveInRecord(int move_number,
                                         const std::string& why)
    : SgfError("illegal move " + std::to_string(move_number) + " in record: " +
               why),
      move_number_(move_number) {}

namespace {

struct Value {
  std::string text;
  std::size_t offset = 0;
};

struct Property {
  std::string ident;
  std::vector<Value> values;
};

using Node = std::vector<Property>;

class Parser {
 public:
  explicit Parser(std::string_view in) : in_(in) {}

  std::vector<Node> main_line() {
    skip_space();
    if (!eat('(')) fail("expected '('");
    std::vector<Node> nodes;
    tree_body(&nodes);
    // Further game trees in a collection are syntax-checked and dropped.
    skip_space();
    while (pos_ < in_.size()) {
      if (!eat('(')) fail("unexpected data after game tree");
      tree_body(nullptr);
      skip_space();
    }
    return nodes;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_space() {
    while (pos_ < in_.size() &&
           std::isspace(static_cast<unsigned char>(in_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < in_.size() && in_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < in_.size() && in_[pos_] == c;
  }

  // After the opening '(' of a game tree. Appends to `out` when non-null.
  void tree_body(std::vector<Node>* out) {
    if (!peek(';')) fail("game tree must start with a node");
    while (eat(';')) {
      Node node = parse_node();
      if (out) out->push_back(std::move(node));
    }
    bool first = true;
    while (eat('(')) {
      tree_body(first ? out : nullptr);
      first = false;
    }
    if (!eat(')')) fail("expected ')'");
  }

  Node parse_node() {
    Node node;
    skip_space();
    while (pos_ < in_.size() &&
           std::isalpha(static_cast<unsigned char>(in_[pos_]))) {
      Property prop;
      while (pos_ < in_.size() &&
             std::isalpha(static_cast<unsigned char>(in_[pos_]))) {
        if (std::isupper(static_cast<unsigned char>(in_[pos_]))) {
          prop.ident += in_[pos_];
        }
        ++pos_;
      }
      if (prop.ident.empty()) fail("property name has no capital letters");
      if (!peek('[')) fail("property " + prop.ident + " has no value");
      while (peek('[')) prop.values.push_back(parse_value());
      node.push_back(std::move(prop));
      skip_space();
    }
    return node;
  }

  Value parse_value() {
    ++pos_;  // '['
    Value v;
    v.offset = pos_;
    while (true) {
      if (pos_ >= in_.size()) fail("unterminated property value");
      const char c = in_[pos_++];
      if (c == ']') break;
      if (c == '\\') {
        if (pos_ >= in_.size()) fail("unterminated escape");
        const char e = in_[pos_++];
        if (e == '\n') continue;  // soft line break
        if (e == '\r') {
          if (pos_ < in_.size() && in_[pos_] == '\n') ++pos_;
          continue;
        }
        v.text += e;
      } else {
        v.text += c;
      }
    }
    return v;
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

const Property* find(const Node& node, std::string_view ident) {
  for (const Property& p : node) {
    if (p.ident == ident) return &p;
  }
  return nullptr;
}

// nullopt = pass. Throws ParseError on malformed or off-board text.
std::optional<Point> sgf_point(const Value& v, int size) {
  const std::string_view t = trim(v.text);
  if (t.empty()) return std::nullopt;
  if (t.size() != 2 || !std::isalpha(static_cast<unsigned char>(t[0])) ||
      !std::isalpha(static_cast<unsigned char>(t[1]))) {
    throw ParseError("bad point '" + v.text + "'", v.offset);
  }
  auto coord = [](char ch) {
    return std::islower(static_cast<unsigned char>(ch)) ? ch - 'a'
                                                        : ch - 'A' + 26;
  };
  if (t == "tt" && size <= 19) return std::nullopt;
  const Point p{coord(t[0]) + 1, size - coord(t[1])};
  if (p.col < 1 || p.col > size || p.row < 1 || p.row > size) {
    throw ParseError("point '" + v.text + "' is off the board", v.offset);
  }
  return p;
}

}  // namespace

SgfRecord load_sgf(std::string_view bytes, KoRule rule) {
  const std::vector<Node> nodes = Parser(bytes).main_line();
  if (nodes.empty()) throw ParseError("no nodes", 0);
  SgfRecord rec;
  const Node& root = nodes.front();
  if (const Property* sz = find(root, "SZ")) {
    long long n = 0;
    const std::string text(trim(sz->values.front().text));
    if (!parse_int(text, n) || n < kMinBoardSize || n > kMaxBoardSize) {
      throw ParseError("unsupported board size '" + text + "'",
                       sz->values.front().offset);
    }
    rec.size = static_cast<int>(n);
  }
  if (const Property* km = find(root, "KM")) {
    if (!parse_number(trim(km->values.front().text), rec.komi)) {
      throw ParseError("bad komi", km->values.front().offset);
    }
  }
  if (const Property* c = find(root, "C")) rec.root_comment = c->values.front().text;

  std::vector<Color> cells(static_cast<std::size_t>(rec.size) * rec.size,
                           Color::Empty);
  auto setup = [&](std::string_view ident, Color color) {
    const Property* p = find(root, ident);
    if (!p) return;
    for (const Value& v : p->values) {
      std::string_view t = v.text;
      Value lo{std::string(t.substr(0, t.find(':'))), v.offset};
      Value hi = lo;
      if (t.find(':') != std::string_view::npos) {
        hi.text = std::string(t.substr(t.find(':') + 1));
      }
      auto a = sgf_point(lo, rec.size);
      auto b = sgf_point(hi, rec.size);
      if (!a || !b) throw ParseError("empty setup point", v.offset);
      for (int col = std::min(a->col, b->col); col <= std::max(a->col, b->col); ++col) {
        for (int row = std::min(a->row, b->row); row <= std::max(a->row, b->row); ++row) {
          if (col < 1 || col > rec.size || row < 1 || row > rec.size) {
            throw ParseError("setup point off the board", v.offset);
          }
          cells[static_cast<std::size_t>(row - 1) * rec.size + col - 1] = color;
        }
      }
    }
  };
  setup("AB", Color::Black);
  setup("AW", Color::White);
  Color first = Color::Black;
  for (const Node& node : nodes) {
    if (find(node, "W") && !find(node, "B")) {
      first = Color::White;
      break;
    }
    if (find(node, "B")) break;
  }
  if (const Property* pl = find(root, "PL")) {
    const std::string_view t = trim(pl->values.front().text);
    if (!t.empty()) first = (t[0] == 'W' || t[0] == 'w') ? Color::White : Color::Black;
  }
  try {
    rec.initial = GoState::from_grid(rec.size, cells, first, rule);
  } catch (const GoError& e) {
    throw ParseError(std::string("bad setup: ") + e.what(), 0);
  }

  GoState state = rec.initial;
  int number = 0;
  for (const Node& node : nodes) {
    const Property* b = find(node, "B");
    const Property* w = find(node, "W");
    if (!b && !w) continue;
    if (b && w) {
      throw ParseError("node holds both B and W", b->values.front().offset);
    }
    const Property* mv = b ? b : w;
    ++number;
    GoMove move;
    move.color = b ? Color::Black : Color::White;
    move.point = sgf_point(mv->values.front(), rec.size);
    SgfStep step{state, move, state, ""};
    try {
      step.after = apply_move(state, move);
    } catch (const GoError& e) {
      throw IllegalMoveInRecord(number, move_text(move) + ": " + e.what());
    }
    if (const Property* c = find(node, "C")) step.comment = c->values.front().text;
    state = step.after;
    rec.steps.push_back(std::move(step));
  }
  return rec;
}

}  // namespace mastermind::go
