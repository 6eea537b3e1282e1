#pragma once

#include <iosfwd>

#include "mastermind/datagen/config.hpp"
#include "mastermind/datagen/manifest.hpp"

namespace mastermind::datagen {

struct GenerateOptions {
  TokenRule tokens = whitespace_tokens();
  /// Skipped trajectories are reported here; null silences them.
  std::ostream* log = nullptr;
};

/// Connects once to every external engine the config relies on, so an
/// unreachable endpoint fails the run up front. Throws bridge::BridgeError.
void preflight(const GenConfig& config);

/// Runs all trajectories (in parallel, each on its own seed), applies the
/// mix weights and sample caps, writes "<task>-NNNNN.jsonl" shards and the
/// manifest into config.output_dir and returns the manifest. Output bytes
/// depend only on the config.
Manifest generate_dataset(const GenConfig& config,
                          const GenerateOptions& options = {});

/// Shard file name for a task, e.g. "go_next_state-00000.jsonl".
std::string shard_name(Task task, int index);

}  // namespace mastermind::datagen
