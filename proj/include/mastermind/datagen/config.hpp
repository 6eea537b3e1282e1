#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "json.hpp"
#include "mastermind/bridge/endpoint.hpp"
#include "mastermind/bridge/gtp.hpp"
#include "mastermind/common/task.hpp"
#include "mastermind/dou/agents.hpp"
#include "mastermind/go/eval.hpp"
#include "mastermind/go/policy.hpp"

namespace mastermind::datagen {

struct TaskPlan {
  int trajectories = 15;
  /// Keep at most this many samples (in trajectory order); 0 keeps all.
  int max_samples = 0;
};

struct DouSettings {
  /// One profile per seat; seat i's agent is reseeded per trajectory.
  std::vector<dou::AgentProfile> profiles = {
      dou::AgentProfile::monte_carlo(200, 1), dou::AgentProfile::monte_carlo(200, 2),
      dou::AgentProfile::monte_carlo(200, 3)};
  double top_p = dou::kDouTopP;
  int landlord_seat = 0;
};

struct GoSettings {
  int board_size = 19;
  double komi = go::kDefaultKomi;
  double top_p = go::kGoTopP;
  int max_moves = 250;
  /// GO_ANALYSIS samples every `analysis_stride` moves.
  int analysis_stride = 8;
  int eval_rollouts = 64;
  double theta = go::kDefaultOwnershipThreshold;
  /// Share of GO_NEXT_STATE samples asking for the move between two boards.
  double action_fraction = 0.0;
  int annotate_last = 1;
  double temperature = 0.5;
  go::GoTier black_tier = go::GoTier::Optimal;
  go::GoTier white_tier = go::GoTier::Suboptimal;
  /// When set, moves and evaluations come from this GTP engine.
  std::optional<bridge::EngineEndpoint> engine;
  bridge::GtpOptions gtp;
};

struct GenConfig {
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = "dataset";
  int shard_size = 10000;
  /// Relative task weights; a task is kept with probability w / max(w).
  /// Tasks without weight are not generated.
  std::map<Task, double> mix;
  std::map<Task, TaskPlan> tasks;
  DouSettings dou;
  GoSettings go;
  /// SGF records with commentary for GO_STATE_EXPL, one trajectory each.
  std::vector<std::filesystem::path> sgf_files;

  GenConfig();
  /// Throws std::invalid_argument.
  void validate() const;
  bool enabled(Task task) const;
  double keep_probability(Task task) const;
  const TaskPlan& plan(Task task) const;
};

void to_json(nlohmann::json& j, const GenConfig& c);
/// Unknown keys are rejected so typos do not pass silently.
void from_json(const nlohmann::json& j, GenConfig& c);

/// Reads a JSON config file. Throws std::runtime_error naming the file.
GenConfig load_config(const std::filesystem::path& path);

}  // namespace mastermind::datagen
