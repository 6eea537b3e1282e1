#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mastermind/arena/match.hpp"
#include "mastermind/arena/replay.hpp"
#include "mastermind/bridge/errors.hpp"
#include "mastermind/bridge/gtp.hpp"
#include "mastermind/bridge/policy.hpp"
#include "mastermind/common/text.hpp"
#include "mastermind/datagen/generate.hpp"
#include "mastermind/datagen/templates.hpp"
#include "mastermind/evalkit/report.hpp"
#include "mastermind/go/codec.hpp"
#include "mastermind/go/sgf.hpp"

namespace fs = std::filesystem;
using namespace mastermind;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_or_print(const std::optional<fs::path>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  if (path->has_parent_path()) fs::create_directories(path->parent_path());
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path->string());
  out << text;
}

struct GenArgs {
  std::string config;
  std::string out;
};

int run_gen(const GenArgs& a, std::optional<std::uint64_t> seed) {
  datagen::GenConfig config = datagen::load_config(a.config);
  if (seed) config.seed = *seed;
  if (!a.out.empty()) config.output_dir = a.out;
  datagen::GenerateOptions options;
  options.log = &std::cerr;
  const datagen::Manifest m = datagen::generate_dataset(config, options);
  std::cout << datagen::manifest_table(m);
  std::cout << "wrote " << (config.output_dir / datagen::kManifestFile).string()
            << "\n";
  return 0;
}

struct EvalArgs {
  std::string predictions;
  std::string out;
  bool full_answer = false;
};

int run_eval(const EvalArgs& a) {
  evalkit::EvalOptions options;
  options.rlsum_full_answer = a.full_answer;
  const auto report =
      evalkit::evaluate_rows(evalkit::read_jsonl(a.predictions), options);
  write_or_print(a.out.empty() ? std::nullopt : std::optional<fs::path>(a.out),
                 report.dump(2) + "\n");
  return 0;
}

struct ArenaArgs {
  std::string config;
  std::string out;
  std::string replays;
  int games = 0;
};

int run_arena(const ArenaArgs& a, std::optional<std::uint64_t> seed) {
  arena::MatchConfig config = arena::load_match_config(a.config);
  if (seed) config.base_seed = *seed;
  if (a.games > 0) config.n_games = a.games;
  if (!a.replays.empty()) config.replay_dir = a.replays;
  if (!a.out.empty()) config.report_file = a.out;
  const arena::MatchReport report = arena::play_match(config);
  write_or_print(config.report_file, arena::report_json(report).dump(2) + "\n");
  std::cerr << "landlord " << config.landlord.describe() << " won "
            << report.landlord_wins << "/" << report.n_games << " ("
            << format_number(report.landlord_win_rate) << ")";
  if (!report.flagged_games.empty()) {
    std::cerr << ", " << report.flagged_games.size() << " flagged";
  }
  std::cerr << "\n";
  return 0;
}

struct ProbeArgs {
  std::string protocol = "gtp";
  std::string command;
  std::string address;
  std::string config;
  int timeout_ms = 0;
};

int run_probe(const ProbeArgs& a) {
  bridge::EngineEndpoint endpoint;
  if (!a.config.empty()) {
    endpoint = nlohmann::json::parse(read_file(a.config)).get<bridge::EngineEndpoint>();
  } else if (!a.command.empty()) {
    std::vector<std::string> argv;
    for (auto w : split_whitespace(a.command)) argv.emplace_back(w);
    endpoint = bridge::EngineEndpoint::subprocess(argv);
  } else if (!a.address.empty()) {
    const auto colon = a.address.rfind(':');
    long long port = 0;
    if (colon == std::string::npos || !parse_int(a.address.substr(colon + 1), port)) {
      throw UsageError("--address must look like host:port");
    }
    endpoint = bridge::EngineEndpoint::tcp(a.address.substr(0, colon),
                                           static_cast<int>(port));
  } else {
    throw UsageError("probe-engine needs --command, --address or --config");
  }
  if (a.timeout_ms > 0) {
    endpoint.connect_timeout_ms = a.timeout_ms;
    endpoint.response_timeout_ms = a.timeout_ms;
  }
  endpoint.validate();
  if (a.protocol == "gtp") {
    bridge::GtpSession session(endpoint);
    std::cout << endpoint.describe() << ": GTP engine '" << session.engine_name()
              << "'\n";
  } else {
    const auto scores = bridge::policy_query(endpoint, dou::DouState::deal(0));
    std::cout << endpoint.describe() << ": policy server scored "
              << scores.entries.size() << " actions\n";
  }
  return 0;
}

void print_sample(const nlohmann::json& row) {
  const datagen::Sample s = datagen::sample_from_json(row);
  std::cout << "task: " << task_name(s.task) << "\n";
  std::cout << "meta: " << s.meta.dump() << "\n";
  std::cout << "--- question\n" << s.question << "\n";
  std::cout << "--- answer\n" << s.answer << "\n";
  if (row.contains("prediction")) {
    std::cout << "--- prediction\n" << row.at("prediction").get<std::string>() << "\n";
  }
}

struct InspectArgs {
  std::string file;
  int line = 1;
};

int run_inspect(const InspectArgs& a) {
  const fs::path path(a.file);
  if (fs::is_directory(path)) {
    std::cout << datagen::manifest_table(datagen::load_manifest(path));
    return 0;
  }
  const std::string ext = path.extension().string();
  if (ext == ".sgf") {
    const go::SgfRecord rec = go::load_sgf(read_file(path));
    const go::GoState& last = rec.steps.empty() ? rec.initial : rec.steps.back().after;
    std::cout << rec.size << "x" << rec.size << ", komi " << format_number(rec.komi)
              << ", " << rec.steps.size() << " moves\n"
              << go::serialize_board(last, 1);
    return 0;
  }
  if (path.filename() == datagen::kManifestFile) {
    std::cout << datagen::manifest_table(datagen::load_manifest(path.parent_path()));
    return 0;
  }
  if (ext == ".jsonl") {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string first;
    std::getline(in, first);
    if (nlohmann::json::parse(first).value("type", "") == "header") {
      std::cout << arena::dump_replay(path);
      return 0;
    }
    in.seekg(0);
    std::string text;
    for (int n = 1; std::getline(in, text); ++n) {
      if (n == a.line) {
        print_sample(nlohmann::json::parse(text));
        return 0;
      }
    }
    throw std::runtime_error(path.string() + " has fewer than " +
                             std::to_string(a.line) + " lines");
  }
  throw UsageError("cannot inspect '" + a.file +
                   "': expected a shard, replay, manifest, dataset dir or .sgf");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doudizhu and Go dataset generation, evaluation and match play"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "Override the base seed of the config");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a dataset and its manifest");
  gen_cmd->add_option("--config", gen.config, "Generation config (JSON)")->required();
  gen_cmd->add_option("--out", gen.out, "Output directory (overrides the config)");

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "Score a prediction file");
  eval_cmd->add_option("--predictions,predictions", ev.predictions,
                       "Shard lines with an added \"prediction\" field")
      ->required();
  eval_cmd->add_option("--out", ev.out, "Report file (default stdout)");
  eval_cmd->add_flag("--rlsum-full-answer", ev.full_answer,
                     "Score CoT RLsum over the whole answer");

  ArenaArgs ar;
  auto* arena_cmd = app.add_subcommand("arena", "Play a landlord-vs-farmers match");
  arena_cmd->add_option("--config", ar.config, "Match config (JSON)")->required();
  arena_cmd->add_option("--out", ar.out, "Report file (default: config or stdout)");
  arena_cmd->add_option("--replays", ar.replays, "Directory for per-game replays");
  arena_cmd->add_option("--games", ar.games, "Override the number of games")
      ->check(CLI::PositiveNumber);

  std::string replay_file;
  auto* replay_cmd = app.add_subcommand("replay", "Print a replay transcript");
  replay_cmd->add_option("file", replay_file, "Replay file")->required();

  ProbeArgs probe;
  auto* probe_cmd = app.add_subcommand("probe-engine", "Handshake with an engine");
  probe_cmd->add_option("--protocol", probe.protocol, "gtp or policy")
      ->check(CLI::IsMember({"gtp", "policy"}));
  probe_cmd->add_option("--command", probe.command, "Engine command line");
  probe_cmd->add_option("--address", probe.address, "host:port");
  probe_cmd->add_option("--config", probe.config, "Endpoint JSON");
  probe_cmd->add_option("--timeout-ms", probe.timeout_ms, "Handshake timeout");

  InspectArgs inspect;
  auto* inspect_cmd = app.add_subcommand(
      "inspect", "Pretty-print a sample, replay, manifest or SGF record");
  inspect_cmd->add_option("file", inspect.file, "File or dataset directory")
      ->required();
  inspect_cmd->add_option("--line", inspect.line, "Sample line (1-based)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen_cmd) return run_gen(gen, seed);
    if (*eval_cmd) return run_eval(ev);
    if (*arena_cmd) return run_arena(ar, seed);
    if (*replay_cmd) {
      std::cout << arena::dump_replay(replay_file);
      return 0;
    }
    if (*probe_cmd) return run_probe(probe);
    if (*inspect_cmd) return run_inspect(inspect);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const bridge::BridgeError& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
