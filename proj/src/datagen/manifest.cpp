#include "mastermind/datagen/manifest.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "mastermind/common/text.hpp"
#include "mastermind/datagen/templates.hpp"

namespace mastermind::datagen {

TokenRule whitespace_tokens() {
  return {"whitespace",
          [](std::string_view text) { return split_whitespace(text).size(); }};
}

void to_json(nlohmann::json& j, const Manifest& m) {
  nlohmann::json tasks = nlohmann::json::object();
  for (const auto& [t, s] : m.tasks) {
    nlohmann::json shards = nlohmann::json::array();
    for (const auto& sh : s.shards) {
      shards.push_back({{"file", sh.file}, {"lines", sh.lines}});
    }
    tasks[std::string(task_name(t))] = {{"trajectories", s.trajectories},
                                        {"samples", s.samples},
                                        {"tokens", s.tokens},
                                        {"metrics", s.metrics},
                                        {"shards", shards},
                                        {"failed_trajectories", s.failed_trajectories},
                                        {"skipped_steps", s.skipped_steps}};
  }
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& s : m.skipped) {
    skipped.push_back(
        {{"family", s.family}, {"trajectory", s.trajectory}, {"error", s.error}});
  }
  j = {{"version", m.version},
       {"template_version", m.template_version},
       {"codec_version", m.codec_version},
       {"token_rule", m.token_rule},
       {"tasks", tasks},
       {"skipped", skipped},
       {"config", m.config}};
}

void from_json(const nlohmann::json& j, Manifest& m) {
  m = Manifest{};
  m.version = j.at("version").get<int>();
  m.template_version = j.at("template_version").get<int>();
  m.codec_version = j.at("codec_version").get<int>();
  m.token_rule = j.at("token_rule").get<std::string>();
  for (const auto& [k, v] : j.at("tasks").items()) {
    const auto t = parse_task(k);
    if (!t) throw ManifestMismatch("manifest names unknown task " + k);
    TaskSummary s;
    s.trajectories = v.at("trajectories").get<std::size_t>();
    s.samples = v.at("samples").get<std::size_t>();
    s.tokens = v.at("tokens").get<std::size_t>();
    s.metrics = v.at("metrics").get<std::vector<std::string>>();
    for (const auto& sh : v.at("shards")) {
      s.shards.push_back({sh.at("file").get<std::string>(),
                          sh.at("lines").get<std::size_t>()});
    }
    s.failed_trajectories = v.value("failed_trajectories", std::size_t{0});
    s.skipped_steps = v.value("skipped_steps", std::size_t{0});
    m.tasks[*t] = std::move(s);
  }
  for (const auto& s : j.value("skipped", nlohmann::json::array())) {
    m.skipped.push_back({s.at("family").get<std::string>(),
                         s.at("trajectory").get<int>(),
                         s.at("error").get<std::string>()});
  }
  m.config = j.value("config", nlohmann::json::object());
}

void write_manifest(const std::filesystem::path& dir, const Manifest& m) {
  std::ofstream out(dir / kManifestFile, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write manifest in " + dir.string());
  out << nlohmann::json(m).dump(2) << '\n';
}

Manifest load_manifest(const std::filesystem::path& dir) {
  std::ifstream in(dir / kManifestFile, std::ios::binary);
  if (!in) throw ManifestMismatch("no manifest in " + dir.string());
  Manifest m;
  try {
    m = nlohmann::json::parse(in).get<Manifest>();
  } catch (const nlohmann::json::exception& e) {
    throw ManifestMismatch(std::string("unreadable manifest: ") + e.what());
  }
  const TokenRule ws = whitespace_tokens();
  const bool recount_tokens = m.token_rule == ws.name;
  for (const auto& [task, summary] : m.tasks) {
    const std::string name(task_name(task));
    std::size_t samples = 0;
    std::size_t tokens = 0;
    for (const auto& shard : summary.shards) {
      std::ifstream f(dir / shard.file, std::ios::binary);
      if (!f) throw ManifestMismatch("missing shard " + shard.file);
      std::string line;
      std::size_t lines = 0;
      while (std::getline(f, line)) {
        ++lines;
        Sample s;
        try {
          s = sample_from_json(nlohmann::json::parse(line));
        } catch (const std::exception& e) {
          throw ManifestMismatch(shard.file + ":" + std::to_string(lines) + ": " +
                                 e.what());
        }
        if (s.task != task) {
          throw ManifestMismatch(shard.file + ":" + std::to_string(lines) +
                                 ": sample of task " +
                                 std::string(task_name(s.task)));
        }
        if (recount_tokens) tokens += ws.count(s.question) + ws.count(s.answer);
      }
      if (lines != shard.lines) {
        throw ManifestMismatch(shard.file + " has " + std::to_string(lines) +
                               " lines, manifest says " +
                               std::to_string(shard.lines));
      }
      samples += lines;
    }
    if (samples != summary.samples) {
      throw ManifestMismatch(name + " has " + std::to_string(samples) +
                             " samples, manifest says " +
                             std::to_string(summary.samples));
    }
    if (recount_tokens && tokens != summary.tokens) {
      throw ManifestMismatch(name + " has " + std::to_string(tokens) +
                             " tokens, manifest says " +
                             std::to_string(summary.tokens));
    }
  }
  return m;
}

std::string manifest_table(const Manifest& m) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "task" << std::right << std::setw(14)
      << "trajectories" << std::setw(10) << "samples" << std::setw(12) << "tokens"
      << "  metrics (" << m.token_rule << " tokens)\n";
  for (const auto& [task, s] : m.tasks) {
    out << std::left << std::setw(16) << task_name(task) << std::right
        << std::setw(14) << s.trajectories << std::setw(10) << s.samples
        << std::setw(12) << s.tokens << "  " << join(s.metrics, ", ") << "\n";
  }
  return out.str();
}

}  // namespace mastermind::datagen
