#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mastermind/go/codec.hpp"
#include "mastermind/go/sgf.hpp"
#include "support/oracles.hpp"

using namespace mastermind::go;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(MM_FIXTURES) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GoState play(GoState s, std::initializer_list<const char*> moves) {
  for (const char* m : moves) {
    s = apply_move(s, GoMove::play(s.to_move(), *parse_point(m, s.size())));
  }
  return s;
}

}  // namespace

TEST_CASE("serialized board layout") {
  const GoState s = play(GoState::empty(5), {"B2", "D4", "C3"});
  const std::string expected =
      "   A B C D E\n"
      " 5 • • • • •\n"
      " 4 • • • o •\n"
      " 3 • • # • •\n"
      " 2 • # • • •\n"
      " 1 • • • • •\n";
  CHECK(serialize_board(s) == expected);

  const std::string annotated =
      "   A B C D E\n"
      " 5 • • • • •\n"
      " 4 • • • o(1) •\n"
      " 3 • • #(2) • •\n"
      " 2 • # • • •\n"
      " 1 • • • • •\n";
  CHECK(serialize_board(s, 2) == annotated);
  CHECK(serialize_board(s, 3).find("#(1)") != std::string::npos);
}

TEST_CASE("two-digit row labels line up") {
  const std::string text = serialize_board(GoState::empty(19));
  CHECK(text.substr(0, 8) == "   A B C");
  CHECK(text.find("\n19 ") != std::string::npos);
  CHECK(text.find("\n 9 ") != std::string::npos);
  CHECK(text.find('I') == std::string::npos);
}

TEST_CASE("board round trip on seeded positions") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int size = 5 + static_cast<int>(seed % 15);
    const GoState s = oracle::random_go_state(seed, size, static_cast<int>(seed * 3));
    const int k = static_cast<int>(seed % 4);
    const std::string text = serialize_board(s, k);
    const ParsedBoard back = parse_board(text, s.to_move());
    CHECK(back.state.same_board(s));
    auto expected = recent_annotations(s, k);
    auto by_point = [](const Annotation& a, const Annotation& b) {
      return std::pair(a.point.row, a.point.col) > std::pair(b.point.row, b.point.col);
    };
    auto parsed = back.annotations;
    std::sort(expected.begin(), expected.end(), by_point);
    std::sort(parsed.begin(), parsed.end(), by_point);
    CHECK(parsed == expected);
    CHECK(serialize_board(back.state) == serialize_board(s));
  }
}

TEST_CASE("annotations skip captured stones") {
  // White's A1 stone is captured by black's B1 and A2.
  GoState s = GoState::empty(5);
  s = apply_move(s, GoMove::play(Color::White, *parse_point("A1", 5)));
  s = apply_move(s, GoMove::play(Color::Black, *parse_point("B1", 5)));
  s = apply_move(s, GoMove::pass(Color::White));
  s = apply_move(s, GoMove::play(Color::Black, *parse_point("A2", 5)));
  const auto notes = recent_annotations(s, 4);
  REQUIRE(notes.size() == 2);
  CHECK(notes[0] == Annotation{Point{2, 1}, Color::Black, 1});
  CHECK(notes[1] == Annotation{Point{1, 2}, Color::Black, 2});
}

TEST_CASE("parse errors are typed") {
  const std::string good = serialize_board(GoState::empty(3));
  CHECK_NOTHROW(parse_grid(good));

  std::string bad_symbol = good;
  bad_symbol.replace(bad_symbol.find("•"), 3, "x");
  CHECK_THROWS_AS(parse_grid(bad_symbol), BadSymbol);

  CHECK_THROWS_AS(parse_grid("   A B C\n 3 • • •\n 2 • •\n 1 • • •\n"), RaggedGrid);
  CHECK_THROWS_AS(parse_grid("   A B C\n 3 • • •\n 2 • • •\n"), RaggedGrid);
  CHECK_THROWS_AS(parse_grid("   A B D\n 3 • • •\n 2 • • •\n 1 • • •\n"),
                  CoordinateMismatch);
  CHECK_THROWS_AS(parse_grid("   A B C\n 3 • • •\n 1 • • •\n 2 • • •\n"),
                  CoordinateMismatch);
  CHECK_THROWS_AS(parse_grid("   A B C\n 3 • • •\n 2 •(1) • •\n 1 • • •\n"), BadSymbol);
  CHECK_THROWS_AS(parse_grid("   A B C\n 3 • • •\n 2 #(0) • •\n 1 • • •\n"), BadSymbol);
  CHECK_THROWS_AS(parse_grid(""), RaggedGrid);
}

TEST_CASE("grid tolerates CRLF and surrounding blank lines") {
  const Grid g = parse_grid("\n   A B\r\n 2 # o\r\n 1 • •\r\n\n");
  CHECK(g.size == 2);
  CHECK(g.cells[2] == Color::Black);
  CHECK(g.cells[3] == Color::White);
}

TEST_CASE("commented record loads its comments") {
  const SgfRecord rec = load_sgf(read_fixture("commented_9x9.sgf"));
  CHECK(rec.size == 9);
  CHECK(rec.komi == doctest::Approx(7.0));
  CHECK(rec.root_comment == "An even game on the small board.");
  REQUIRE(rec.steps.size() == 12);
  CHECK(rec.steps[0].move == GoMove::play(Color::Black, *parse_point("E5", 9)));
  CHECK(rec.steps[0].comment == "Black takes the centre point.");
  CHECK(rec.steps[2].comment.empty());
  CHECK(rec.steps[3].comment.empty());
  CHECK(rec.steps[11].after.to_move() == Color::Black);
}

TEST_CASE("setup stones, captures and passes in a record") {
  const SgfRecord rec = load_sgf(read_fixture("capture_9x9.sgf"));
  CHECK(rec.komi == doctest::Approx(6.5));
  CHECK(rec.initial.setup_stones() == 4);
  CHECK(rec.initial.to_move() == Color::White);
  REQUIRE(rec.steps.size() == 3);
  CHECK(rec.steps[0].after.at(*parse_point("B9", 9)) == Color::Empty);
  CHECK(rec.steps[0].after.at(*parse_point("A8", 9)) == Color::Black);
  CHECK(rec.steps[1].move.is_pass());
  CHECK(rec.steps[2].after.at(*parse_point("A8", 9)) == Color::Empty);
  CHECK(rec.steps[2].after.captured(Color::Black) == 2);
}

TEST_CASE("malformed records report offsets") {
  try {
    load_sgf("(;SZ[9];B[ee];W[zz])");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 16);
  }
  CHECK_THROWS_AS(load_sgf("(;SZ[9];B[ee]"), ParseError);
  CHECK_THROWS_AS(load_sgf("(;SZ[40])"), ParseError);
  CHECK_THROWS_AS(load_sgf(""), ParseError);
  try {
    load_sgf("(;SZ[9];B[ee];W[ee])");
    FAIL("expected an illegal move");
  } catch (const IllegalMoveInRecord& e) {
    CHECK(e.move_number() == 2);
  }
}
