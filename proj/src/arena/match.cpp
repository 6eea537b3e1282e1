#include "mastermind/arena/match.hpp"

#include <cstdio>
#include <fstream>
#include <set>

#include "mastermind/arena/replay.hpp"
#include "mastermind/common/parallel.hpp"
#include "mastermind/common/rng.hpp"

namespace mastermind::arena {

std::vector<FixedDeal> load_deals(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open deals file " + path.string());
  const nlohmann::json j = nlohmann::json::parse(in);
  std::vector<FixedDeal> deals;
  for (const auto& d : j.at("deals")) {
    FixedDeal deal;
    for (const auto& h : d.at("hands")) {
      deal.hands.push_back(dou::parse_cards(h.get<std::string>()));
    }
    deal.to_move = d.value("to_move", 0);
    // from_hands checks seat count, hand sizes and the deck.
    dou::DouState::from_hands(deal.hands, 0, deal.to_move);
    if (deal.hands.size() != 3) {
      throw std::invalid_argument("fixed deals need three hands");
    }
    deals.push_back(std::move(deal));
  }
  if (deals.empty()) throw std::invalid_argument("deals file has no deals");
  return deals;
}

void MatchConfig::validate() const {
  if (n_games < 1) throw std::invalid_argument("n_games must be >= 1");
  landlord.validate();
  for (const auto& f : farmers) f.validate();
  if (deal_mode == DealMode::FixedDeals && deals.empty()) {
    throw std::invalid_argument("FIXED_DEALS needs at least one deal");
  }
}

void to_json(nlohmann::json& j, const MatchConfig& c) {
  j = {{"landlord", c.landlord},
       {"farmers", c.farmers},
       {"n_games", c.n_games},
       {"base_seed", c.base_seed},
       {"deal_mode", c.deal_mode == DealMode::Random ? "RANDOM" : "FIXED_DEALS"}};
  if (c.deal_mode == DealMode::FixedDeals) {
    j["deals_file"] = c.deals_file.generic_string();
  }
}

void from_json(const nlohmann::json& j, MatchConfig& c) {
  c = MatchConfig{};
  for (const auto& [k, v] : j.items()) {
    static const std::set<std::string> known = {
        "landlord", "farmers", "n_games", "base_seed", "deal_mode",
        "deals_file", "replay_dir", "report"};
    if (!known.count(k)) throw std::invalid_argument("unknown key '" + k + "'");
  }
  if (j.contains("landlord")) c.landlord = j.at("landlord").get<dou::AgentProfile>();
  if (j.contains("farmers")) {
    const auto& f = j.at("farmers");
    if (!f.is_array() || f.size() != 2) {
      throw std::invalid_argument("farmers needs exactly two profiles");
    }
    c.farmers = {f[0].get<dou::AgentProfile>(), f[1].get<dou::AgentProfile>()};
  }
  c.n_games = j.value("n_games", c.n_games);
  c.base_seed = j.value("base_seed", c.base_seed);
  const std::string mode = j.value("deal_mode", std::string("RANDOM"));
  if (mode == "RANDOM") {
    c.deal_mode = DealMode::Random;
  } else if (mode == "FIXED_DEALS") {
    c.deal_mode = DealMode::FixedDeals;
    c.deals_file = j.at("deals_file").get<std::string>();
    c.deals = load_deals(c.deals_file);
  } else {
    throw std::invalid_argument("unknown deal_mode '" + mode + "'");
  }
  if (j.contains("replay_dir")) c.replay_dir = j.at("replay_dir").get<std::string>();
  if (j.contains("report")) c.report_file = j.at("report").get<std::string>();
  c.validate();
}

MatchConfig load_match_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  try {
    return nlohmann::json::parse(in).get<MatchConfig>();
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

std::string replay_name(int game) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "game-%05d.jsonl", game);
  return buf;
}

namespace {

std::vector<int> hand_sizes(const dou::DouState& s) {
  std::vector<int> out;
  for (const auto& h : s.hands()) out.push_back(h.size());
  return out;
}

GameOutcome play_game(const MatchConfig& config, int game) {
  GameOutcome out;
  out.game = game;
  out.seed = derive_seed(config.base_seed, {static_cast<std::uint64_t>(game)});
  dou::DouState state =
      config.deal_mode == DealMode::Random
          ? dou::DouState::deal(derive_seed(out.seed, {0}), 0)
          : dou::DouState::from_hands(
                config.deals[game % config.deals.size()].hands, 0,
                config.deals[game % config.deals.size()].to_move);
  out.initial_hands = state.hands();

  std::vector<dou::Agent> agents;
  const dou::AgentProfile* profiles[3] = {&config.landlord, &config.farmers[0],
                                          &config.farmers[1]};
  for (std::uint64_t s = 0; s < 3; ++s) {
    agents.emplace_back(profiles[s]->reseeded({out.seed, s}));
  }
  while (!dou::is_terminal(state)) {
    const int seat = state.to_move();
    dou::Combo action;
    try {
      action = agents[seat].act(state);
    } catch (const dou::AgentFailure& e) {
      out.flagged = true;
      out.failure = "seat " + std::to_string(seat) + ": " + e.what();
      out.winner = state.side_of(seat) == dou::Side::Landlord ? dou::Side::Farmers
                                                             : dou::Side::Landlord;
      out.turns = static_cast<int>(out.events.size());
      return out;
    }
    state = dou::apply_action(state, action);
    out.events.push_back({static_cast<int>(out.events.size()) + 1, seat, action,
                          hand_sizes(state)});
  }
  out.winner = *dou::is_terminal(state);
  out.turns = static_cast<int>(out.events.size());
  return out;
}

}  // namespace

MatchReport play_match(const MatchConfig& config) {
  config.validate();
  MatchReport report;
  report.config = config;
  report.n_games = config.n_games;
  report.games.resize(static_cast<std::size_t>(config.n_games));
  if (config.replay_dir) std::filesystem::create_directories(*config.replay_dir);
  const std::vector<std::string> names = {config.landlord.describe(),
                                          config.farmers[0].describe(),
                                          config.farmers[1].describe()};
  parallel_for_index(report.games.size(), [&](std::size_t i) {
    GameOutcome g = play_game(config, static_cast<int>(i));
    if (config.replay_dir) {
      g.replay = replay_name(g.game);
      write_replay(*config.replay_dir / g.replay, g, names);
    }
    report.games[i] = std::move(g);
  });
  for (const auto& g : report.games) {
    if (g.winner == dou::Side::Landlord) ++report.landlord_wins;
    if (g.flagged) report.flagged_games.push_back(g.game);
  }
  report.landlord_win_rate =
      static_cast<double>(report.landlord_wins) / static_cast<double>(report.n_games);
  return report;
}

nlohmann::json report_json(const MatchReport& report) {
  nlohmann::json games = nlohmann::json::array();
  for (const auto& g : report.games) {
    nlohmann::json row = {{"game", g.game},
                          {"seed", g.seed},
                          {"winner", std::string(dou::side_name(g.winner))},
                          {"turns", g.turns},
                          {"flagged", g.flagged}};
    if (g.flagged) row["failure"] = g.failure;
    if (!g.replay.empty()) row["replay"] = g.replay;
    games.push_back(std::move(row));
  }
  return {{"config", report.config},
          {"n_games", report.n_games},
          {"landlord_wins", report.landlord_wins},
          {"landlord_win_rate", report.landlord_win_rate},
          {"flagged_games", report.flagged_games},
          {"games", games}};
}

}  // namespace mastermind::arena
