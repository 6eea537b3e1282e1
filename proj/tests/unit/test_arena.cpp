#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mastermind/arena/match.hpp"
#include "mastermind/arena/replay.hpp"
#include "mastermind/dou/state.hpp"

using namespace mastermind;
using namespace mastermind::arena;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("mm_arena_" + name);
  fs::remove_all(dir);
  return dir;
}

MatchConfig rule_match(int games, std::uint64_t seed) {
  MatchConfig c;
  c.n_games = games;
  c.base_seed = seed;
  return c;
}

}  // namespace

TEST_CASE("matches are reproducible") {
  const MatchReport a = play_match(rule_match(12, 5));
  const MatchReport b = play_match(rule_match(12, 5));
  CHECK(report_json(a).dump() == report_json(b).dump());
  CHECK(a.n_games == 12);
  int wins = 0;
  for (const GameOutcome& g : a.games) {
    wins += g.winner == dou::Side::Landlord;
    CHECK(g.turns == static_cast<int>(g.events.size()));
    CHECK_FALSE(g.flagged);
  }
  CHECK(a.landlord_wins == wins);
  CHECK(a.landlord_win_rate == doctest::Approx(wins / 12.0));
  CHECK(report_json(play_match(rule_match(12, 6))).dump() != report_json(a).dump());
}

TEST_CASE("deals do not depend on the agents") {
  MatchConfig rule = rule_match(6, 9);
  MatchConfig mixed = rule_match(6, 9);
  mixed.landlord = dou::AgentProfile::random(1);
  mixed.farmers = {dou::AgentProfile::monte_carlo(20, 2), dou::AgentProfile::random(3)};
  const MatchReport a = play_match(rule);
  const MatchReport b = play_match(mixed);
  for (int i = 0; i < 6; ++i) {
    CHECK(a.games[i].seed == b.games[i].seed);
    CHECK(a.games[i].initial_hands == b.games[i].initial_hands);
    CHECK(a.games[i].initial_hands[0].size() == 20);
  }
}

TEST_CASE("every game is legal from its starting hands") {
  const MatchReport r = play_match(rule_match(8, 1));
  for (const GameOutcome& g : r.games) {
    dou::DouState s = dou::DouState::from_hands(g.initial_hands, 0, 0);
    for (const ReplayEvent& e : g.events) {
      CHECK(s.to_move() == e.seat);
      s = dou::apply_action(s, e.action);
      for (int seat = 0; seat < 3; ++seat) {
        CHECK(static_cast<int>(s.hand(seat).size()) == e.hand_sizes[seat]);
      }
    }
    REQUIRE(dou::is_terminal(s));
    CHECK(*dou::is_terminal(s) == g.winner);
  }
}

TEST_CASE("replays load, validate and dump") {
  const fs::path dir = scratch("replays");
  MatchConfig c = rule_match(3, 11);
  c.replay_dir = dir;
  const MatchReport r = play_match(c);
  const fs::path file = dir / replay_name(1);
  CHECK(replay_name(1) == "game-00001.jsonl");
  REQUIRE(fs::exists(file));
  CHECK(r.games[1].replay == replay_name(1));

  const GameOutcome back = load_replay(file);
  CHECK(back.turns == r.games[1].turns);
  CHECK(back.winner == r.games[1].winner);
  CHECK(back.initial_hands == r.games[1].initial_hands);

  const std::string dump = dump_replay(file);
  CHECK(dump.rfind("game 1 (seed ", 0) == 0);
  CHECK(dump.find("PASS") != std::string::npos);
  CHECK(dump.find("result: ") != std::string::npos);

  std::ifstream in(file);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  const auto header_end = text.find('\n');
  CHECK(nlohmann::json::parse(text.substr(0, header_end))["type"] == "header");

  // Swap two move lines: the replay no longer checks out.
  std::vector<std::string> lines;
  std::istringstream split(text);
  for (std::string l; std::getline(split, l);) lines.push_back(l);
  std::swap(lines[1], lines[2]);
  {
    std::ofstream out(dir / "broken.jsonl");
    for (const auto& l : lines) out << l << "\n";
  }
  CHECK_THROWS_AS(load_replay(dir / "broken.jsonl"), InvalidReplay);
  CHECK_THROWS_AS(load_replay(dir / "missing.jsonl"), NotFound);
  {
    std::ofstream out(dir / "other.jsonl");
    out << "{\"task\":\"DOU_PROB\"}\n";
  }
  CHECK_THROWS_AS(load_replay(dir / "other.jsonl"), NotFound);
  fs::remove_all(dir);
}

TEST_CASE("a failing agent loses and is flagged") {
  MatchConfig c = rule_match(2, 3);
  auto ep = bridge::EngineEndpoint::subprocess({MM_MOCK_POLICY, "--mode", "close"});
  ep.response_timeout_ms = 500;
  c.landlord = dou::AgentProfile::oracle(ep);
  const MatchReport r = play_match(c);
  CHECK(r.flagged_games == std::vector<int>{0, 1});
  CHECK(r.landlord_wins == 0);
  for (const GameOutcome& g : r.games) {
    CHECK(g.flagged);
    CHECK(g.winner == dou::Side::Farmers);
    CHECK_FALSE(g.failure.empty());
  }
  CHECK(report_json(r)["flagged_games"].size() == 2);
}

TEST_CASE("fixed deals") {
  const auto deals = load_deals(fs::path(MM_FIXTURES) / "fig_deals.json");
  REQUIRE(deals.size() == 1);
  CHECK(deals[0].hands[0].size() == 20);

  MatchConfig c = rule_match(3, 1);
  c.deal_mode = DealMode::FixedDeals;
  c.deals = deals;
  const MatchReport r = play_match(c);
  for (const GameOutcome& g : r.games) CHECK(g.initial_hands == deals[0].hands);

  const fs::path dir = scratch("config");
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "match.json");
    out << R"({"landlord": "RULE", "farmers": ["RANDOM", {"kind": "RANDOM", "seed": 4}],
               "n_games": 3, "base_seed": 1, "deal_mode": "FIXED_DEALS",
               "deals_file": ")"
        << (fs::path(MM_FIXTURES) / "fig_deals.json").string() << "\"}";
  }
  const MatchConfig loaded = load_match_config(dir / "match.json");
  CHECK(loaded.deals.size() == 1);
  CHECK(loaded.n_games == 3);
  {
    std::ofstream out(dir / "bad.json");
    out << R"({"deals": [{"hands": ["3 3", "4", "5"], "to_move": 0}, {"hands": ["3 3 3 3 3"]}]})";
  }
  CHECK_THROWS(load_deals(dir / "bad.json"));
  fs::remove_all(dir);
}

TEST_CASE("config validation") {
  MatchConfig c = rule_match(0, 1);
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = rule_match(2, 1);
  c.deal_mode = DealMode::FixedDeals;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK_THROWS(nlohmann::json{{"n_games", 2}, {"bogus", 1}}.get<MatchConfig>());
}
