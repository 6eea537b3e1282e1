#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "mastermind/arena/match.hpp"

namespace mastermind::arena {

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class InvalidReplay : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Line-delimited JSON: a header line {"type":"header",...}, one line per
/// move {"game","turn","seat","action","hand_sizes"}, then a result line
/// {"type":"result",...}.
std::string replay_text(const GameOutcome& game,
                        const std::vector<std::string>& profiles);
void write_replay(const std::filesystem::path& path, const GameOutcome& game,
                  const std::vector<std::string>& profiles);

/// Reads a replay and replays every move through the engine. Throws
/// NotFound when the file is missing or not a replay, InvalidReplay when a
/// move is illegal or the recorded sizes or result disagree.
GameOutcome load_replay(const std::filesystem::path& path);

/// Turn-by-turn transcript with a closing result line.
std::string dump_replay(const std::filesystem::path& path);

}  // namespace mastermind::arena
