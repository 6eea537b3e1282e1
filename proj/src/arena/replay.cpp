#include "mastermind/arena/replay.hpp"

#include <fstream>
#include <sstream>

namespace mastermind::arena {

std::string replay_text(const GameOutcome& game,
                        const std::vector<std::string>& profiles) {
  std::vector<std::string> hands;
  for (const auto& h : game.initial_hands) hands.push_back(dou::encode_cards(h));
  std::string out = nlohmann::json{{"type", "header"},
                                   {"game", game.game},
                                   {"seed", game.seed},
                                   {"landlord", 0},
                                   {"hands", hands},
                                   {"profiles", profiles}}
                        .dump();
  out += '\n';
  for (const auto& e : game.events) {
    out += nlohmann::json{{"game", game.game},
                          {"turn", e.turn},
                          {"seat", e.seat},
                          {"action", dou::action_text(e.action)},
                          {"hand_sizes", e.hand_sizes}}
               .dump();
    out += '\n';
  }
  nlohmann::json result = {{"type", "result"},
                           {"game", game.game},
                           {"winner", std::string(dou::side_name(game.winner))},
                           {"turns", game.turns},
                           {"flagged", game.flagged}};
  if (game.flagged) result["failure"] = game.failure;
  out += result.dump();
  out += '\n';
  return out;
}

void write_replay(const std::filesystem::path& path, const GameOutcome& game,
                  const std::vector<std::string>& profiles) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write replay " + path.string());
  out << replay_text(game, profiles);
}

namespace {

struct LoadedReplay {
  GameOutcome game;
  std::vector<std::string> profiles;
  int first_to_move = 0;
};

LoadedReplay read_replay(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFound("no replay at " + path.string());
  std::vector<nlohmann::json> lines;
  std::string line;
  try {
    while (std::getline(in, line)) {
      if (!line.empty()) lines.push_back(nlohmann::json::parse(line));
    }
  } catch (const nlohmann::json::exception&) {
    throw NotFound(path.string() + " is not a replay");
  }
  if (lines.size() < 2 || lines.front().value("type", "") != "header" ||
      lines.back().value("type", "") != "result") {
    throw NotFound(path.string() + " is not a replay");
  }
  LoadedReplay r;
  try {
    const auto& head = lines.front();
    r.game.game = head.at("game").get<int>();
    r.game.seed = head.at("seed").get<std::uint64_t>();
    for (const auto& h : head.at("hands")) {
      r.game.initial_hands.push_back(dou::parse_cards(h.get<std::string>()));
    }
    r.profiles = head.value("profiles", std::vector<std::string>{});
    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
      const auto& e = lines[i];
      r.game.events.push_back({e.at("turn").get<int>(), e.at("seat").get<int>(),
                               dou::parse_action(e.at("action").get<std::string>()),
                               e.at("hand_sizes").get<std::vector<int>>()});
    }
    const auto& res = lines.back();
    const std::string winner = res.at("winner").get<std::string>();
    if (winner != dou::side_name(dou::Side::Landlord) &&
        winner != dou::side_name(dou::Side::Farmers)) {
      throw InvalidReplay("unknown winner '" + winner + "'");
    }
    r.game.winner = winner == dou::side_name(dou::Side::Landlord)
                        ? dou::Side::Landlord
                        : dou::Side::Farmers;
    r.game.turns = res.at("turns").get<int>();
    r.game.flagged = res.value("flagged", false);
    r.game.failure = res.value("failure", "");
  } catch (const InvalidReplay&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidReplay(path.string() + ": " + e.what());
  }
  r.first_to_move = r.game.events.empty() ? 0 : r.game.events.front().seat;
  return r;
}

}  // namespace

GameOutcome load_replay(const std::filesystem::path& path) {
  LoadedReplay r = read_replay(path);
  GameOutcome& g = r.game;
  try {
    dou::DouState state = dou::DouState::from_hands(g.initial_hands, 0, r.first_to_move);
    for (const auto& e : g.events) {
      if (e.seat != state.to_move()) {
        throw InvalidReplay("turn " + std::to_string(e.turn) + ": seat " +
                            std::to_string(e.seat) + " moved out of order");
      }
      state = dou::apply_action(state, e.action);
      std::vector<int> sizes;
      for (const auto& h : state.hands()) sizes.push_back(h.size());
      if (sizes != e.hand_sizes) {
        throw InvalidReplay("turn " + std::to_string(e.turn) +
                            ": recorded hand sizes disagree");
      }
    }
    const auto winner = dou::is_terminal(state);
    if (!g.flagged && (!winner || *winner != g.winner)) {
      throw InvalidReplay("recorded result disagrees with the moves");
    }
    if (g.turns != static_cast<int>(g.events.size())) {
      throw InvalidReplay("recorded turn count disagrees with the moves");
    }
  } catch (const InvalidReplay&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidReplay(path.string() + ": " + e.what());
  }
  g.replay = path.filename().string();
  return g;
}

std::string dump_replay(const std::filesystem::path& path) {
  const GameOutcome g = load_replay(path);
  std::ostringstream out;
  out << "game " << g.game << " (seed " << g.seed << ")\n";
  for (std::size_t s = 0; s < g.initial_hands.size(); ++s) {
    out << "seat " << s << (s == 0 ? " landlord " : " farmer   ") << "["
        << dou::encode_cards(g.initial_hands[s]) << "]\n";
  }
  for (const auto& e : g.events) {
    out << e.turn << ". seat " << e.seat << ": "
        << (e.action.is_pass() ? std::string("PASS")
                               : "[" + dou::action_text(e.action) + "]");
    out << "  (";
    for (std::size_t k = 0; k < e.hand_sizes.size(); ++k) {
      out << (k ? "/" : "") << e.hand_sizes[k];
    }
    out << ")\n";
  }
  out << "result: " << dou::side_name(g.winner) << " win after " << g.turns
      << " turns";
  if (g.flagged) out << " (flagged: " << g.failure << ")";
  out << "\n";
  return out.str();
}

}  // namespace mastermind::arena
