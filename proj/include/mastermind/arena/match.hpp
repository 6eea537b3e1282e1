#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mastermind/dou/agents.hpp"
#include "mastermind/dou/state.hpp"

namespace mastermind::arena {

enum class DealMode { Random, FixedDeals };

/// Hands in seat order; the landlord sits at seat 0.
struct FixedDeal {
  std::vector<dou::Cards> hands;
  int to_move = 0;
};

/// Reads {"deals": [{"hands": ["3 3 ...", ...], "to_move": 0}, ...]}.
std::vector<FixedDeal> load_deals(const std::filesystem::path& path);

struct MatchConfig {
  dou::AgentProfile landlord = dou::AgentProfile::rule();
  std::array<dou::AgentProfile, 2> farmers = {dou::AgentProfile::rule(),
                                              dou::AgentProfile::rule()};
  int n_games = 100;
  std::uint64_t base_seed = 0;
  DealMode deal_mode = DealMode::Random;
  /// FixedDeals: game i plays deal i mod deals.size().
  std::filesystem::path deals_file;
  std::vector<FixedDeal> deals;
  /// When set, game i's replay goes to replay_dir/game-NNNNN.jsonl.
  std::optional<std::filesystem::path> replay_dir;
  /// Where the CLI writes the report.
  std::optional<std::filesystem::path> report_file;

  /// Throws std::invalid_argument.
  void validate() const;
};

void to_json(nlohmann::json& j, const MatchConfig& c);
/// Loads deals_file too when the mode asks for it.
void from_json(const nlohmann::json& j, MatchConfig& c);
MatchConfig load_match_config(const std::filesystem::path& path);

struct ReplayEvent {
  int turn = 0;
  int seat = 0;
  dou::Combo action;
  std::vector<int> hand_sizes;  // after the action
};

struct GameOutcome {
  int game = 0;
  std::uint64_t seed = 0;
  dou::Side winner = dou::Side::Landlord;
  int turns = 0;
  /// An agent failed; its side was scored as the loser.
  bool flagged = false;
  std::string failure;
  std::vector<dou::Cards> initial_hands;
  std::vector<ReplayEvent> events;
  std::string replay;  // file name, empty when replays are not written
};

struct MatchReport {
  nlohmann::json config;
  int n_games = 0;
  int landlord_wins = 0;
  double landlord_win_rate = 0.0;
  std::vector<GameOutcome> games;
  std::vector<int> flagged_games;
};

/// Game i deals from derive_seed(base_seed, {i}) and seat s plays with its
/// profile reseeded by (game seed, s), so deals never depend on the agents.
/// Games run in parallel; the report is assembled in game order.
MatchReport play_match(const MatchConfig& config);

/// Report JSON without the per-move events.
nlohmann::json report_json(const MatchReport& report);

std::string replay_name(int game);

}  // namespace mastermind::arena
