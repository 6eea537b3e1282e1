#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mastermind/bridge/analysis.hpp"
#include "mastermind/bridge/errors.hpp"
#include "mastermind/bridge/gtp.hpp"
#include "mastermind/bridge/policy.hpp"
#include "mastermind/dou/state.hpp"
#include "mastermind/go/eval.hpp"

using namespace mastermind;
using namespace mastermind::bridge;
using go::Color;

namespace {

std::string golden_line() {
  std::ifstream in(std::string(MM_FIXTURES) + "/golden_analysis_9x9.txt");
  std::string line;
  std::getline(in, line);
  return line;
}

double golden_ownership(int index) {
  const int top_row = 8 - index / 9;
  return (index % 9 - top_row) * 0.125;
}

EngineEndpoint mock_engine(std::vector<std::string> extra = {}) {
  std::vector<std::string> argv{MM_MOCK_GTP, "--analysis-file",
                                std::string(MM_FIXTURES) + "/golden_analysis_9x9.txt",
                                "--name", "mock"};
  argv.insert(argv.end(), extra.begin(), extra.end());
  auto ep = EngineEndpoint::subprocess(argv);
  ep.connect_timeout_ms = 2000;
  ep.response_timeout_ms = 700;
  return ep;
}

go::GoState small_game() {
  go::GoState s = go::GoState::empty(9);
  s = go::apply_move(s, go::GoMove::play(Color::Black, go::Point{3, 3}));
  s = go::apply_move(s, go::GoMove::play(Color::White, go::Point{7, 7}));
  return s;
}

}  // namespace

TEST_CASE("golden analysis line for black") {
  const AnalysisRecord rec = parse_analysis_line(golden_line(), 9, Color::Black);
  REQUIRE(rec.candidates.size() == 2);
  CHECK(rec.candidates[0].move == go::GoMove::play(Color::Black, go::Point{5, 5}));
  CHECK(rec.candidates[0].visits == 120);
  CHECK(rec.candidates[0].win_rate == doctest::Approx(0.62));
  CHECK(rec.candidates[0].score_lead == doctest::Approx(3.5));
  CHECK(rec.candidates[0].prior == doctest::Approx(0.2));
  CHECK(rec.candidates[1].move == go::GoMove::play(Color::Black, go::Point{4, 4}));
  CHECK(rec.candidates[1].visits == 40);
  CHECK(rec.win_rate == doctest::Approx(0.62));
  CHECK(rec.score_lead == doctest::Approx(3.5));
  REQUIRE(rec.ownership.size() == 81);
  for (int i = 0; i < 81; ++i) CHECK(rec.ownership[i] == doctest::Approx(golden_ownership(i)));
}

TEST_CASE("white to move flips to black's view") {
  const AnalysisRecord rec = parse_analysis_line(golden_line(), 9, Color::White);
  CHECK(rec.candidates[0].move.color == Color::White);
  CHECK(rec.win_rate == doctest::Approx(0.38));
  CHECK(rec.score_lead == doctest::Approx(-3.5));
  CHECK(rec.ownership[80] == doctest::Approx(-golden_ownership(80)));
}

TEST_CASE("formatting a record parses back") {
  const AnalysisRecord rec = parse_analysis_line(golden_line(), 9, Color::White);
  const AnalysisRecord back =
      parse_analysis_line(format_analysis_line(rec, 9, Color::White), 9, Color::White);
  CHECK(back.candidates.size() == rec.candidates.size());
  CHECK(back.win_rate == doctest::Approx(rec.win_rate));
  for (int i = 0; i < 81; ++i) CHECK(back.ownership[i] == doctest::Approx(rec.ownership[i]));
}

TEST_CASE("defective analysis lines are malformed responses") {
  const std::string line = golden_line();
  auto replaced = [&](const std::string& from, const std::string& to) {
    std::string out = line;
    out.replace(out.find(from), from.size(), to);
    return out;
  };
  const std::vector<std::string> bad = {
      "",
      "nonsense",
      replaced("winrate 0.62", "winrate 1.2"),
      replaced("winrate 0.62", "winrate abc"),
      replaced("scoreLead 3.5", "scoreLead nan"),
      replaced("ownership 0 ", "ownership 7 "),
      line.substr(0, line.rfind(' ')),
      replaced("visits 120 ", ""),
      replaced("move E5", "move Z99"),
  };
  for (const std::string& b : bad) {
    CAPTURE(b.substr(0, 60));
    CHECK_THROWS_AS(parse_analysis_line(b, 9, Color::Black), MalformedResponse);
  }
  try {
    parse_analysis_line(bad[2], 9, Color::Black);
  } catch (const MalformedResponse& e) {
    CHECK(e.raw() == bad[2]);
  }
  CHECK_THROWS_AS(parse_analysis_line(line, 13, Color::Black), MalformedResponse);
}

TEST_CASE("GTP response parsing") {
  const GtpResponse ok = parse_gtp_response("=12 mock");
  CHECK(ok.success);
  CHECK(ok.id == "12");
  CHECK(ok.payload == "mock");
  const GtpResponse err = parse_gtp_response("? unknown command");
  CHECK_FALSE(err.success);
  CHECK(err.payload == "unknown command");
  CHECK(parse_gtp_response("= line one\nline two").payload == "line one\nline two");
  CHECK_THROWS_AS(parse_gtp_response("hello"), ProtocolError);
  CHECK_THROWS_AS(parse_gtp_response(""), ProtocolError);
}

TEST_CASE("session against the mock engine") {
  GtpSession session(mock_engine());
  CHECK(session.engine_name() == "mock");
  CHECK(session.connections() == 1);

  const go::GoState s = small_game();
  const AnalysisRecord rec = session.play_and_analyze(s);
  CHECK(rec.ownership.size() == 81);
  CHECK(rec.win_rate == doctest::Approx(0.62));
  CHECK(session.engine_board(9) == s.cells());

  const go::PositionEval eval = go::eval_from_analysis(rec, 9);
  CHECK(eval.score_lead == doctest::Approx(-7.5));

  CHECK_THROWS_AS(session.command("frobnicate"), EngineError);
  CHECK(session.command("name") == "mock");
}

TEST_CASE("faulty analyses are typed and the session survives") {
  GtpSession session(mock_engine());
  const go::GoState s = small_game();

  session.command("mock-mode bad-ownership");
  CHECK_THROWS_AS(session.play_and_analyze(s), MalformedResponse);
  CHECK(session.play_and_analyze(s).win_rate == doctest::Approx(0.62));

  session.command("mock-mode winrate");
  CHECK_THROWS_AS(session.play_and_analyze(s), MalformedResponse);

  session.command("mock-mode hang");
  CHECK_THROWS_AS(session.play_and_analyze(s), ResponseTimeout);
  const AnalysisRecord again = session.play_and_analyze(s);
  CHECK(again.win_rate == doctest::Approx(0.62));
  CHECK(session.connections() == 2);
}

TEST_CASE("handshake failures") {
  CHECK_THROWS_AS(GtpSession(mock_engine({"--garbage-handshake"})), ProtocolError);
  CHECK_THROWS_AS(GtpSession(EngineEndpoint::subprocess({"/nonexistent/engine"})),
                  ConnectFailed);
}

TEST_CASE("endpoint validation and json") {
  EngineEndpoint ep = EngineEndpoint::tcp("localhost", 9000);
  CHECK_NOTHROW(ep.validate());
  ep.response_timeout_ms = 0;
  CHECK_THROWS_AS(ep.validate(), std::invalid_argument);
  CHECK_THROWS_AS(EngineEndpoint::subprocess({}).validate(), std::invalid_argument);

  const EngineEndpoint round = nlohmann::json(mock_engine()).get<EngineEndpoint>();
  CHECK(round.command == mock_engine().command);
  CHECK(round.response_timeout_ms == 700);
}

TEST_CASE("policy protocol request and response") {
  const dou::DouState s = dou::DouState::deal(3);
  const nlohmann::json req = policy_request(s);
  CHECK(req["v"] == kPolicyProtocolVersion);
  CHECK(req["seat"] == 0);
  CHECK(req["hand_sizes"] == nlohmann::json::array({20, 17, 17}));
  CHECK(req["dominant"].is_null());
  CHECK(req["legal"].size() > 1);

  const std::string first = req["legal"][0];
  const auto scored = parse_policy_response(
      R"({"v":1,"logits":{")" + first + R"(":1.5}})", s);
  CHECK(scored.entries.size() == 1);

  CHECK_THROWS_AS(parse_policy_response("not json", s), MalformedResponse);
  CHECK_THROWS_AS(parse_policy_response(R"({"v":1})", s), MalformedResponse);
  CHECK_THROWS_AS(parse_policy_response(R"({"v":1,"logits":{")" + first + R"(":"x"}})", s),
                  MalformedResponse);
  CHECK_THROWS_AS(parse_policy_response(R"({"v":1,"logits":{"3 4":1}})", s),
                  UnknownActionInResponse);
  CHECK_THROWS_AS(parse_policy_response(R"({"v":1,"logits":{"pass":1}})", s),
                  UnknownActionInResponse);
}
