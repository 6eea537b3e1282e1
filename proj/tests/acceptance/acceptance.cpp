// Acceptance run: one PASS/FAIL line per criterion with its wall time.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mastermind/arena/match.hpp"
#include "mastermind/bridge/errors.hpp"
#include "mastermind/bridge/gtp.hpp"
#include "mastermind/datagen/config.hpp"
#include "mastermind/datagen/generate.hpp"
#include "mastermind/datagen/manifest.hpp"
#include "mastermind/datagen/templates.hpp"
#include "mastermind/dou/action_space.hpp"
#include "mastermind/dou/agents.hpp"
#include "mastermind/dou/scored_actions.hpp"
#include "mastermind/evalkit/answer.hpp"
#include "mastermind/evalkit/metrics.hpp"
#include "mastermind/evalkit/rouge.hpp"
#include "mastermind/go/codec.hpp"
#include "mastermind/go/eval.hpp"
#include "mastermind/go/policy.hpp"
#include "support/appendix_d.hpp"
#include "support/oracles.hpp"

using namespace mastermind;
namespace fs = std::filesystem;

namespace {

// Frozen after the first run; any change in the action enumeration or the
// arena's seeding shows up here.
constexpr std::size_t kActionSpaceSize = 27472;
constexpr int kArenaGames = 300;
constexpr std::uint64_t kArenaSeed = 2024;
constexpr int kArenaLandlordWins = 293;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure; later checks still run so the detail shows
// the earliest problem.
struct Checker {
  Outcome out;
  void expect(bool cond, const std::string& what) {
    if (!cond && out.ok) {
      out.ok = false;
      out.detail = what;
    }
  }
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "mm_acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::size_t count_words(const std::string& text) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string w; in >> w;) ++n;
  return n;
}

std::vector<nlohmann::json> read_lines(const fs::path& file) {
  std::vector<nlohmann::json> rows;
  std::ifstream in(file);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) rows.push_back(nlohmann::json::parse(line));
  }
  return rows;
}

std::vector<nlohmann::json> task_rows(const fs::path& dir, const datagen::Manifest& m,
                                      Task task) {
  std::vector<nlohmann::json> rows;
  for (const auto& shard : m.tasks.at(task).shards) {
    for (auto& r : read_lines(dir / shard.file)) rows.push_back(std::move(r));
  }
  return rows;
}

// 1 ----------------------------------------------------------------------
Outcome action_space() {
  Checker c;
  const auto& all = dou::enumerate_all_actions();
  c.expect(all.size() > 27000, "fewer than 27,000 combos");
  c.expect(all.size() == kActionSpaceSize,
           "count " + std::to_string(all.size()) + " differs from the frozen value");
  std::set<std::pair<dou::Category, dou::Cards>> distinct;
  for (const auto& a : all) distinct.insert({a.category(), a.cards()});
  c.expect(distinct.size() == all.size(), "duplicate combos");
  const auto again = dou::enumerate_all_actions();
  c.expect(again == all, "second enumeration differs");
  c.out.detail = c.out.ok ? std::to_string(all.size()) + " actions" : c.out.detail;
  return c.out;
}

// 2 ----------------------------------------------------------------------
Outcome appendix_d_playouts() {
  Checker c;
  const auto small = appendix_d::play(dou::smallest_solo_policy);
  const auto large = appendix_d::play(dou::largest_solo_policy);
  c.expect(small.faces == std::vector<std::string>{"Q", "K", "2", "PASS", "A"},
           "smallest-card sequence differs");
  c.expect(small.winner == dou::Side::Landlord, "smallest-card game not won");
  c.expect(large.faces == std::vector<std::string>{"Q", "2", "PASS", "2", "PASS", "K"},
           "largest-card sequence differs");
  c.expect(large.winner == dou::Side::Farmers, "largest-card game not lost");
  if (c.out.ok) c.out.detail = "win vs smallest, loss vs largest";
  return c.out;
}

// 3 ----------------------------------------------------------------------
Outcome oracle_equivalence() {
  Checker c;
  int dou_states = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const dou::DouState s = oracle::random_dou_state(seed, static_cast<int>(seed % 40));
    auto engine = dou::legal_actions(s);
    auto brute = oracle::legal_by_filter(s);
    std::sort(engine.begin(), engine.end(), dou::canonical_less);
    std::sort(brute.begin(), brute.end(), dou::canonical_less);
    c.expect(engine == brute, "legal actions differ at seed " + std::to_string(seed));
    ++dou_states;
  }
  int positions = 0;
  for (std::uint64_t seed = 1; positions < 1000; ++seed) {
    const int size = std::array{9, 13, 19, 5, 7}[seed % 5];
    const go::GoState s = oracle::random_go_state(seed, size, static_cast<int>(seed % 150));
    std::mt19937_64 rng(seed);
    std::vector<int> empties;
    for (int i = 0; i < s.area(); ++i) {
      if (s.at(i) == go::Color::Empty) empties.push_back(i);
    }
    if (empties.empty()) continue;
    const int idx = empties[rng() % empties.size()];
    const auto expect = oracle::play_by_flood_fill(size, s.cells(), idx, s.to_move());
    const go::GoMove m = go::GoMove::play(s.to_move(), s.point_of(idx));
    const std::string where = "position " + std::to_string(seed);
    try {
      const go::GoState after = go::apply_move(s, m);
      c.expect(!expect.suicide, where + ": suicide accepted");
      c.expect(after.cells() == expect.cells, where + ": board differs");
    } catch (const go::Suicide&) {
      c.expect(expect.suicide, where + ": legal move refused as suicide");
    } catch (const go::KoViolation&) {
      c.expect(expect.captured >= 1, where + ": ko without capture");
    }
    ++positions;
  }
  if (c.out.ok) {
    c.out.detail = std::to_string(dou_states) + " Doudizhu states, " +
                   std::to_string(positions) + " Go positions";
  }
  return c.out;
}

// 4 ----------------------------------------------------------------------
Outcome codec_round_trips() {
  Checker c;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    dou::Cards cards;
    std::vector<int> codes;
    for (int r = 0; r < dou::kNumRanks; ++r) {
      const int n = static_cast<int>(rng() % (dou::max_copies(r) + 1));
      if (n) cards.add(r, n);
      for (int k = 0; k < n; ++k) codes.push_back(dou::rank_code(r));
    }
    c.expect(dou::parse_cards(dou::encode_cards(cards)) == cards,
             "card round trip " + std::to_string(i));
    std::shuffle(codes.begin(), codes.end(), rng);
    std::string shuffled;
    for (int code : codes) shuffled += (shuffled.empty() ? "" : " ") + std::to_string(code);
    c.expect(dou::parse_cards(shuffled) == cards, "shuffled card text " + std::to_string(i));
  }
  for (int i = 0; i < 1000; ++i) {
    const int size = 2 + i % 24;
    const go::GoState s =
        oracle::random_go_state(1000 + i, size, static_cast<int>(rng() % (size * size / 3 + 1)));
    const int k = i % 5;
    const std::string text = go::serialize_board(s, k);
    const go::ParsedBoard back = go::parse_board(text, s.to_move());
    c.expect(back.state.same_board(s) && go::serialize_board(back.state) ==
                                             go::serialize_board(s),
             "board round trip " + std::to_string(i));
    c.expect(back.annotations.size() == go::recent_annotations(s, k).size(),
             "annotations " + std::to_string(i));
  }
  if (c.out.ok) c.out.detail = "1000 hands, 1000 boards";
  return c.out;
}

// 5 ----------------------------------------------------------------------
Outcome next_state_consistency() {
  Checker c;
  datagen::GenConfig cfg;
  cfg.seed = 5;
  cfg.output_dir = work_dir() / "next_state";
  cfg.mix = {{Task::GoNextState, 1.0}};
  cfg.tasks = {{Task::GoNextState, datagen::TaskPlan{24, 0}}};
  cfg.go.board_size = 19;
  cfg.go.max_moves = 250;
  const datagen::Manifest m = datagen::generate_dataset(cfg);
  const auto rows = task_rows(cfg.output_dir, m, Task::GoNextState);
  c.expect(rows.size() >= 5000, "only " + std::to_string(rows.size()) + " samples");

  std::vector<std::string> replayed, answers;
  for (const auto& row : rows) {
    const datagen::Sample s = datagen::sample_from_json(row);
    const datagen::GoQuestion q = datagen::parse_go_question(s.question);
    if (!q.move) {
      c.expect(false, "question without a move");
      continue;
    }
    const go::GoState before = go::parse_board(q.board, q.to_move).state;
    const go::GoState after = go::apply_move(before, *q.move);
    replayed.push_back(go::serialize_board(after));
    answers.push_back(s.answer);
  }
  const double engine_acc = evalkit::s_prime_accuracy(replayed, answers);
  const double truth_acc = evalkit::s_prime_accuracy(answers, answers);
  c.expect(engine_acc == 1.0, "replayed boards: s' Acc. " + std::to_string(engine_acc));
  c.expect(truth_acc == 1.0, "ground truth: s' Acc. " + std::to_string(truth_acc));
  if (c.out.ok) c.out.detail = std::to_string(rows.size()) + " samples, s' Acc. 1.0";
  return c.out;
}

// 6 ----------------------------------------------------------------------
Outcome analysis_consistency() {
  Checker c;
  std::size_t checked = 0;
  for (int size : {9, 19}) {
    datagen::GenConfig cfg;
    cfg.seed = 6;
    cfg.output_dir = work_dir() / ("analysis_" + std::to_string(size));
    cfg.mix = {{Task::GoAnalysis, 1.0}};
    cfg.tasks = {{Task::GoAnalysis, datagen::TaskPlan{size == 9 ? 30 : 10, 0}}};
    cfg.go.board_size = size;
    cfg.go.analysis_stride = size == 9 ? 3 : 8;
    cfg.go.komi = size == 9 ? 6.5 : 7.5;
    const datagen::Manifest m = datagen::generate_dataset(cfg);
    for (const auto& row : task_rows(cfg.output_dir, m, Task::GoAnalysis)) {
      const std::string answer = row.at("answer");
      const std::string question = row.at("question");
      const auto p = evalkit::parse_answer(answer, Task::GoAnalysis);
      if (!p.format_ok) {
        c.expect(false, "answer does not parse: " + p.reason);
        continue;
      }
      std::vector<go::Owner> discrete;
      for (go::Color col : p.ownership->cells) {
        discrete.push_back(col == go::Color::Black   ? go::Owner::Black
                           : col == go::Color::White ? go::Owner::White
                                                     : go::Owner::Undecided);
      }
      const auto counts =
          go::count_territory(go::OwnershipMap::from_discrete(p.ownership->size, discrete));
      c.expect(counts.black == *p.count_black && counts.white == *p.count_white,
               "embedded counts disagree with the map");
      const auto komi_at = question.find("komi ");
      const double komi = std::stod(question.substr(komi_at + 5));
      c.expect(komi == cfg.go.komi, "komi in the question");
      c.expect(go::score_lead(counts, komi) == *p.lead, "lead does not recompute exactly");
      ++checked;
    }
  }
  c.expect(checked >= 500, "only " + std::to_string(checked) + " samples");
  if (c.out.ok) c.out.detail = std::to_string(checked) + " samples";
  return c.out;
}

// 7 ----------------------------------------------------------------------
Outcome metric_goldens() {
  Checker c;
  const auto cat = evalkit::rouge_l("the cat sat", "the cat ran");
  c.expect(std::abs(cat.f1 - 2.0 / 3) <= 1e-9 && std::abs(cat.precision - 2.0 / 3) <= 1e-9 &&
               std::abs(cat.recall - 2.0 / 3) <= 1e-9,
           "rouge_l cat example");
  c.expect(evalkit::rouge_l("black wins the fight", "black wins the fight").f1 == 1.0,
           "identical texts");
  c.expect(evalkit::rouge_l("black wins", "white loses").f1 == 0.0, "disjoint texts");
  std::vector<std::optional<double>> preds;
  std::vector<double> labels;
  for (int i = 0; i < 10; ++i) {
    labels.push_back(i - 2.5);
    preds.push_back(i == 3 ? std::nullopt : std::optional<double>(i - 2.5));
  }
  c.expect(evalkit::score_mae(preds, labels) == 1.0, "score MAE with one malformed answer");
  c.expect(evalkit::winrate_mae({0.5}, {0.45}) - 0.05 < 1e-12, "win rate MAE");
  if (c.out.ok) c.out.detail = "rouge 2/3, 1, 0; MAE fallback 1.0";
  return c.out;
}

// 8 ----------------------------------------------------------------------
Outcome top_p_contract() {
  Checker c;
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const dou::DouState s = oracle::random_dou_state(seed, static_cast<int>(seed % 10));
    dou::ScoredActions raw;
    std::normal_distribution<double> logit(0.0, 2.0);
    for (const auto& a : dou::legal_actions(s)) raw.entries.emplace_back(a, logit(rng));
    const dou::ScoredActions probs = raw.softmax();
    const auto order = dou::descending(probs);
    const auto full = dou::top_p_filter(probs, 1.0);
    c.expect(full.size() == order.size(), "p=1 drops actions");
    for (std::size_t i = 0; i < full.size() && i < order.size(); ++i) {
      c.expect(full[i] == order[i].first, "p=1 order differs from descending order");
    }
    std::size_t last = 0;
    std::vector<double> descending_probs;
    for (const auto& e : order) descending_probs.push_back(e.second);
    std::size_t last_go = 0;
    for (int k = 1; k <= 100; ++k) {
      const double p = k / 100.0;
      const std::size_t n = dou::top_p_filter(probs, p).size();
      c.expect(n >= last, "filter shrinks as p grows");
      last = n;
      const std::size_t g = go::nucleus_size(descending_probs, p);
      c.expect(g == n, "Go nucleus disagrees with the Doudizhu filter");
      c.expect(g >= last_go, "nucleus shrinks as p grows");
      last_go = g;
    }
  }
  const datagen::GenConfig defaults;
  c.expect(dou::kDouTopP == 0.25 && defaults.dou.top_p == 0.25, "Doudizhu default");
  c.expect(go::kGoTopP == 0.4 && defaults.go.top_p == 0.4, "Go default");
  if (c.out.ok) c.out.detail = "100 distributions x 100 thresholds";
  return c.out;
}

// 9 ----------------------------------------------------------------------
Outcome arena_sanity() {
  Checker c;
  arena::MatchConfig cfg;
  cfg.landlord = dou::AgentProfile::monte_carlo(2000, 1);
  cfg.farmers = {dou::AgentProfile::random(2), dou::AgentProfile::random(3)};
  cfg.n_games = kArenaGames;
  cfg.base_seed = kArenaSeed;
  const arena::MatchReport first = arena::play_match(cfg);
  const arena::MatchReport second = arena::play_match(cfg);
  const std::string a = arena::report_json(first).dump(2);
  const std::string b = arena::report_json(second).dump(2);
  c.expect(a == b, "reports differ between identical runs");
  c.expect(first.landlord_win_rate >= 0.70,
           "win rate " + std::to_string(first.landlord_win_rate));
  c.expect(first.landlord_wins == kArenaLandlordWins,
           "landlord wins " + std::to_string(first.landlord_wins) +
               " differ from the frozen value");
  c.expect(first.flagged_games.empty(), "flagged games");
  if (c.out.ok) {
    std::ostringstream d;
    d << first.landlord_wins << "/" << first.n_games << " landlord wins ("
      << first.landlord_win_rate << "), reports identical";
    c.out.detail = d.str();
  }
  return c.out;
}

// 10 ---------------------------------------------------------------------
Outcome manifest_fidelity() {
  Checker c;
  datagen::GenConfig cfg;
  cfg.seed = 10;
  cfg.output_dir = work_dir() / "desk";
  cfg.mix = {{Task::DouProb, 1.0},
             {Task::DouNoProb, 1.0},
             {Task::DouPredProb, 1.0},
             {Task::GoNextState, 1.0},
             {Task::GoAnalysis, 1.0}};
  cfg.tasks = {{Task::DouProb, {15, 0}},
               {Task::DouNoProb, {15, 0}},
               {Task::DouPredProb, {15, 0}},
               {Task::GoNextState, {10, 2000}},
               {Task::GoAnalysis, {20, 500}}};
  const datagen::Manifest written = datagen::generate_dataset(cfg);
  const datagen::Manifest m = datagen::load_manifest(cfg.output_dir);

  c.expect(m.tasks.at(Task::GoNextState).samples == 2000, "GO_NEXT_STATE sample count");
  c.expect(m.tasks.at(Task::GoAnalysis).samples == 500, "GO_ANALYSIS sample count");
  for (Task t : {Task::DouProb, Task::DouNoProb, Task::DouPredProb}) {
    c.expect(m.tasks.at(t).trajectories == 15, "Doudizhu trajectories");
  }
  const nlohmann::json doc =
      nlohmann::json::parse(std::ifstream(cfg.output_dir / datagen::kManifestFile));
  for (const auto& [task, summary] : m.tasks) {
    const std::string name(task_name(task));
    const auto& entry = doc.at("tasks").at(name);
    for (const char* column : {"trajectories", "samples", "tokens", "metrics"}) {
      c.expect(entry.contains(column), name + " lacks " + column);
    }
    std::size_t lines = 0, tokens = 0;
    for (const auto& row : task_rows(cfg.output_dir, m, task)) {
      ++lines;
      tokens += count_words(row.at("question")) + count_words(row.at("answer"));
      c.expect(row.at("task") == name, name + " shard holds another task");
    }
    c.expect(lines == summary.samples, name + " sample count");
    c.expect(tokens == summary.tokens, name + " token count");
    c.expect(summary.samples == written.tasks.at(task).samples, name + " reload");
    c.expect(!summary.metrics.empty(), name + " metrics");
  }
  if (c.out.ok) {
    std::ostringstream d;
    d << m.tasks.size() << " tasks match their shards\n" << datagen::manifest_table(m);
    c.out.detail = d.str();
    c.out.detail.pop_back();
  }
  return c.out;
}

// 11 ---------------------------------------------------------------------
Outcome bridge_robustness() {
  Checker c;
  auto ep = bridge::EngineEndpoint::subprocess(
      {MM_MOCK_GTP, "--analysis-file",
       std::string(MM_FIXTURES) + "/golden_analysis_9x9.txt"});
  ep.response_timeout_ms = 800;
  bridge::GtpSession session(ep);
  go::GoState s = go::GoState::empty(9);
  s = go::apply_move(s, go::GoMove::play(go::Color::Black, {5, 5}));

  auto golden_ok = [&](const std::string& when) {
    try {
      const auto rec = session.play_and_analyze(s);
      const bool ok = rec.candidates.size() == 2 && rec.ownership.size() == 81 &&
                      std::abs(rec.win_rate - 0.38) < 1e-12 &&
                      std::abs(rec.score_lead + 3.5) < 1e-12 &&
                      std::abs(rec.ownership[0] - 1.0) < 1e-12;
      c.expect(ok, "golden record differs " + when);
    } catch (const std::exception& e) {
      c.expect(false, "golden analysis failed " + when + ": " + e.what());
    }
  };
  auto expect_error = [&](const std::string& mode, auto tag) {
    using Error = decltype(tag);
    session.command("mock-mode " + mode);
    try {
      session.play_and_analyze(s);
      c.expect(false, mode + ": no error");
    } catch (const Error&) {
    } catch (const std::exception& e) {
      c.expect(false, mode + ": wrong error: " + e.what());
    }
    golden_ok("after " + mode);
  };
  golden_ok("on first call");
  expect_error("bad-ownership", bridge::MalformedResponse("", ""));
  expect_error("winrate", bridge::MalformedResponse("", ""));
  expect_error("hang", bridge::ResponseTimeout("", ""));
  if (c.out.ok) c.out.detail = "golden parsed; ownership, winrate, timeout typed; session intact";
  return c.out;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "action space size", action_space},
      {2, "scripted endgame playouts", appendix_d_playouts},
      {3, "engine oracle equivalence", oracle_equivalence},
      {4, "codec round trips", codec_round_trips},
      {5, "next-state self-consistency", next_state_consistency},
      {6, "analysis internal consistency", analysis_consistency},
      {7, "metric golden values", metric_goldens},
      {8, "top-p contract", top_p_contract},
      {9, "arena sanity", arena_sanity},
      {10, "manifest fidelity", manifest_fidelity},
      {11, "bridge robustness", bridge_robustness},
  };
  const std::vector<double> budgets = {10, 1, 60, 1e9, 1e9, 1e9, 1e9, 1e9, 300, 600, 1e9};
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double budget = budgets[cr.number - 1];
    if (o.ok && secs > budget) {
      o.ok = false;
      o.detail = "over the " + std::to_string(static_cast<int>(budget)) + " s budget";
    }
    failed += !o.ok;
    std::printf("%s %d %s (%.2f s) %s\n", o.ok ? "PASS" : "FAIL", cr.number, cr.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  fs::remove_all(work_dir());
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
