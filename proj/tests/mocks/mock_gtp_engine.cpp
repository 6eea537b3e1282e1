// Scripted GTP engine for bridge tests. It keeps a real board so that
// showboard reflects the synced position, and answers kata-analyze with the
// line read from --analysis-file. "mock-mode <m>" arms a one-shot fault for
// the next analysis: bad-ownership, winrate, hang.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "mastermind/common/text.hpp"
#include "mastermind/go/codec.hpp"
#include "mastermind/go/state.hpp"

using namespace mastermind;

namespace {

void reply(const std::string& payload, bool ok = true) {
  std::cout << (ok ? "=" : "?") << (payload.empty() ? "" : " ") << payload
            << "\n\n"
            << std::flush;
}

std::string read_all(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  return line;
}

std::string faulty(const std::string& golden, const std::string& mode) {
  const auto tokens = split_whitespace(golden);
  std::string out;
  bool in_ownership = false;
  bool dropped = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string t(tokens[i]);
    if (mode == "winrate" && i > 0 && tokens[i - 1] == "winrate") t = "1.2";
    if (t == "ownership") in_ownership = true;
    if (mode == "bad-ownership" && in_ownership && t != "ownership" && !dropped) {
      dropped = true;
      continue;
    }
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string analysis_file;
  std::string name = "mock-gtp";
  bool garbage = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--analysis-file" && i + 1 < argc) analysis_file = argv[++i];
    if (a == "--name" && i + 1 < argc) name = argv[++i];
    if (a == "--garbage-handshake") garbage = true;
  }
  const std::string golden = analysis_file.empty() ? "" : read_all(analysis_file);

  go::GoState state = go::GoState::empty(19);
  std::string mode;
  std::string line;
  while (std::getline(std::cin, line)) {
    const auto words = split_whitespace(line);
    if (words.empty()) continue;
    const std::string cmd(words[0]);
    if (garbage) {
      std::cout << "hello there\n\n" << std::flush;
      continue;
    }
    if (cmd == "protocol_version") {
      reply("2");
    } else if (cmd == "name") {
      reply(name);
    } else if (cmd == "version") {
      reply("1");
    } else if (cmd == "quit") {
      reply("");
      return 0;
    } else if (cmd == "boardsize" && words.size() == 2) {
      long long n = 0;
      parse_int(words[1], n);
      state = go::GoState::empty(static_cast<int>(n));
      reply("");
    } else if (cmd == "komi" || cmd == "clear_board") {
      if (cmd == "clear_board") state = go::GoState::empty(state.size());
      reply("");
    } else if (cmd == "play" && words.size() == 3) {
      const go::Color c = (words[1] == "B" || words[1] == "b") ? go::Color::Black
                                                               : go::Color::White;
      try {
        if (words[2] == "pass") {
          state = go::apply_move(state, go::GoMove::pass(c));
        } else {
          auto p = go::parse_point(words[2], state.size());
          if (!p) throw std::runtime_error("bad vertex");
          state = go::apply_move(state, go::GoMove::play(c, *p));
        }
        reply("");
      } catch (const std::exception&) {
        reply("illegal move", false);
      }
    } else if (cmd == "showboard") {
      std::ostringstream board;
      board << "\n";
      for (int row = state.size(); row >= 1; --row) {
        board << row;
        for (int col = 1; col <= state.size(); ++col) {
          const go::Color c = state.at(go::Point{col, row});
          board << ' ' << (c == go::Color::Black ? 'X' : c == go::Color::White ? 'O' : '.');
        }
        board << "\n";
      }
      std::string text = board.str();
      text.pop_back();
      reply(text);
    } else if (cmd == "mock-mode" && words.size() == 2) {
      mode = words[1];
      reply("");
    } else if (cmd == "kata-analyze") {
      const std::string armed = mode;
      mode.clear();
      std::cout << "=\n" << std::flush;
      if (armed == "hang") {
        std::this_thread::sleep_for(std::chrono::hours(1));
        return 0;
      }
      std::cout << (armed.empty() ? golden : faulty(golden, armed)) << "\n"
                << std::flush;
      // Streaming stops at the next command: close the block, then answer it.
      if (!std::getline(std::cin, line)) return 0;
      std::cout << "\n" << std::flush;
      const auto next = split_whitespace(line);
      if (!next.empty() && next[0] == "protocol_version") {
        reply("2");
      } else {
        reply("");
      }
    } else {
      reply("unknown command", false);
    }
  }
  return 0;
}
