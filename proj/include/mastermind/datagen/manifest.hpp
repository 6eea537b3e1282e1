#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mastermind/common/task.hpp"

namespace mastermind::datagen {

inline constexpr int kManifestVersion = 1;
inline constexpr std::string_view kManifestFile = "manifest.json";

/// Counts tokens in one text; the manifest records the rule by name.
struct TokenRule {
  std::string name;
  std::function<std::size_t(std::string_view)> count;
};
/// Whitespace-delimited tokens.
TokenRule whitespace_tokens();

struct ShardInfo {
  std::string file;
  std::size_t lines = 0;
};

struct TaskSummary {
  std::size_t trajectories = 0;
  std::size_t samples = 0;
  std::size_t tokens = 0;
  /// Table labels of the metrics scored on this task.
  std::vector<std::string> metrics;
  std::vector<ShardInfo> shards;
  /// Trajectories that failed and were left out.
  std::size_t failed_trajectories = 0;
  /// Positions that yielded no sample (forced moves, empty comments).
  std::size_t skipped_steps = 0;
};

struct SkipRecord {
  std::string family;
  int trajectory = 0;
  std::string error;
};

struct Manifest {
  int version = kManifestVersion;
  int template_version = 0;
  int codec_version = 0;
  std::string token_rule;
  std::map<Task, TaskSummary> tasks;
  std::vector<SkipRecord> skipped;
  nlohmann::json config;
};

void to_json(nlohmann::json& j, const Manifest& m);
void from_json(const nlohmann::json& j, Manifest& m);

class ManifestMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `dir`/manifest.json (pretty-printed, LF).
void write_manifest(const std::filesystem::path& dir, const Manifest& m);

/// Loads `dir`/manifest.json and re-counts every shard: lines per shard,
/// sample totals, tasks named in each line and, for the whitespace rule,
/// tokens. Throws ManifestMismatch on any difference.
Manifest load_manifest(const std::filesystem::path& dir);

/// Table 5 style rows: task, trajectories, samples, tokens, metrics.
std::string manifest_table(const Manifest& m);

}  // namespace mastermind::datagen
