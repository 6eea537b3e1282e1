#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "mastermind/datagen/config.hpp"
#include "mastermind/datagen/templates.hpp"

namespace mastermind::datagen {

/// Trajectory families; each has its own seed stream.
enum class Family { Dou, Go, Sgf };
std::string_view family_name(Family f);
Family family_of(Task task);

std::uint64_t trajectory_seed(const GenConfig& config, Family family,
                              int trajectory);

/// Samples of one trajectory for the wanted tasks of its family, ordered by
/// step then task. Every sample's meta carries what regenerate_sample needs.
struct TrajectoryOutput {
  std::vector<Sample> samples;
  /// Positions that produced no sample (forced moves, empty comments).
  int skipped_steps = 0;
};

/// Three-seat Doudizhu play with the configured profiles. Decisions with a
/// single legal action produce no samples.
TrajectoryOutput dou_trajectory(const GenConfig& config, int trajectory,
                                const std::set<Task>& wanted);

/// Go self-play between the two tiers; the tiers swap colours on odd
/// trajectories.
TrajectoryOutput go_trajectory(const GenConfig& config, int trajectory,
                               const std::set<Task>& wanted);

/// GO_STATE_EXPL samples from the commented positions of one SGF file.
TrajectoryOutput sgf_trajectory(const GenConfig& config, int trajectory);

/// Rebuilds one sample from its meta by replaying its trajectory. Throws
/// std::invalid_argument when the meta does not name an emitted sample.
Sample regenerate_sample(const GenConfig& config, const nlohmann::json& meta);

}  // namespace mastermind::datagen
