#include "mastermind/bridge/gtp.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>

#include "mastermind/bridge/errors.hpp"
#include "mastermind/common/text.hpp"

namespace mastermind::bridge {

using Clock = std::chrono::steady_clock;
using go::Color;
using go::GoMove;
using go::GoState;

GtpResponse parse_gtp_response(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size() &&
         std::isspace(static_cast<unsigned char>(text[start]))) {
    ++start;
  }
  if (start == text.size()) throw ProtocolError("empty GTP response", std::string(text));
  const char status = text[start];
  if (status != '=' && status != '?') {
    throw ProtocolError("GTP response must start with '=' or '?'",
                        std::string(text));
  }
  GtpResponse r;
  r.success = status == '=';
  std::size_t pos = start + 1;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    r.id += text[pos++];
  }
  if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
      text[pos] != '\n' && text[pos] != '\r') {
    throw ProtocolError("malformed GTP status token", std::string(text));
  }
  std::string payload(trim(text.substr(pos)));
  payload.erase(std::remove(payload.begin(), payload.end(), '\r'), payload.end());
  r.payload = std::move(payload);
  return r;
}

GtpSession::GtpSession(EngineEndpoint endpoint, GtpOptions options)
    : endpoint_(std::move(endpoint)), options_(std::move(options)) {
  endpoint_.validate();
  connect();
}

void GtpSession::drop() { channel_.reset(); }

void GtpSession::connect() {
  drop();
  channel_ = LineChannel::open(endpoint_);
  ++connections_;
  const auto timeout = std::chrono::milliseconds(endpoint_.connect_timeout_ms);
  try {
    channel_->write_line("protocol_version");
    const std::string text = read_response_text(timeout, "protocol_version");
    const GtpResponse r = parse_gtp_response(text);
    long long version = 0;
    if (!r.success || !parse_int(r.payload, version) || version != 2) {
      throw ProtocolError("engine answered protocol_version with '" +
                              r.payload + "'",
                          text);
    }
    channel_->write_line("name");
    const GtpResponse name = parse_gtp_response(read_response_text(timeout, "name"));
    name_ = name.success ? name.payload : std::string("unknown");
  } catch (const ResponseTimeout& e) {
    drop();
    throw HandshakeTimeout(std::string("handshake: ") + e.what(), e.raw());
  } catch (const ConnectionClosed& e) {
    drop();
    throw ProtocolError(std::string("engine closed during handshake: ") + e.what(),
                        e.raw());
  } catch (...) {
    drop();
    throw;
  }
}

std::string GtpSession::read_response_text(std::chrono::milliseconds timeout,
                                           std::string_view context) {
  const auto deadline = Clock::now() + timeout;
  std::string text;
  bool started = false;
  while (true) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - Clock::now());
    std::optional<std::string> line;
    if (left.count() > 0) line = channel_->read_line(left);
    if (!line) {
      drop();
      throw ResponseTimeout("no complete answer to '" + std::string(context) +
                                "' within " + std::to_string(timeout.count()) +
                                " ms",
                            text);
    }
    if (trim(*line).empty()) {
      if (started) return text;
      continue;
    }
    started = true;
    text += *line;
    text += '\n';
  }
}

std::string GtpSession::command(std::string_view line) {
  if (!channel_) connect();
  const auto timeout = std::chrono::milliseconds(endpoint_.response_timeout_ms);
  std::string text;
  try {
    channel_->write_line(line);
    text = read_response_text(timeout, line);
  } catch (const ConnectionClosed&) {
    drop();
    throw;
  }
  GtpResponse r;
  try {
    r = parse_gtp_response(text);
  } catch (const ProtocolError&) {
    drop();
    throw;
  }
  if (!r.success) {
    throw EngineError("engine rejected '" + std::string(line) + "': " + r.payload,
                      text);
  }
  return r.payload;
}

namespace {

std::string gtp_move(const GoMove& m) {
  return std::string(1, go::color_letter(m.color)) + " " +
         (m.is_pass() ? std::string("pass") : go::point_text(*m.point));
}

// Stones of one colour in an order where each stone touches an empty point
// or an already placed stone of its chain, so no prefix is suicide.
std::vector<int> setup_order(const GoState& s, Color c) {
  std::vector<int> order;
  std::vector<char> placed(s.area(), 0);
  int nb[4];
  for (int i = 0; i < s.area(); ++i) {
    if (s.at(i) != c || placed[i]) continue;
    const go::ChainInfo chain = go::chain_at(s, i);
    std::vector<int> frontier;
    for (int stone : chain.stones) {
      const int n = go::neighbours(s.size(), stone, nb);
      for (int k = 0; k < n; ++k) {
        if (s.at(nb[k]) == Color::Empty) {
          frontier.push_back(stone);
          placed[stone] = 1;
          break;
        }
      }
    }
    for (std::size_t h = 0; h < frontier.size(); ++h) {
      const int n = go::neighbours(s.size(), frontier[h], nb);
      for (int k = 0; k < n; ++k) {
        if (s.at(nb[k]) == c && !placed[nb[k]]) {
          placed[nb[k]] = 1;
          frontier.push_back(nb[k]);
        }
      }
    }
    order.insert(order.end(), frontier.begin(), frontier.end());
  }
  return order;
}

std::string replace_color(std::string cmd, Color c) {
  const std::string key = "{color}";
  for (auto pos = cmd.find(key); pos != std::string::npos; pos = cmd.find(key)) {
    cmd.replace(pos, key.size(), std::string(1, go::color_letter(c)));
  }
  return cmd;
}

}  // namespace

void GtpSession::sync(const GoState& state) {
  command("boardsize " + std::to_string(state.size()));
  command("komi " + format_number(options_.komi));
  command("clear_board");
  if (state.setup_stones() > 0) {
    // The starting position is not recoverable from history, so the current
    // stones are laid down directly.
    for (Color c : {Color::Black, Color::White}) {
      for (int i : setup_order(state, c)) {
        command("play " + gtp_move(GoMove::play(c, state.point_of(i))));
      }
    }
    return;
  }
  for (const GoMove& m : state.history()) command("play " + gtp_move(m));
}

AnalysisRecord GtpSession::play_and_analyze(const GoState& state) {
  sync(state);
  return options_.mode == AnalysisMode::KataAnalyze
             ? kata_analyze(state)
             : genmove_final_status(state);
}

AnalysisRecord GtpSession::kata_analyze(const GoState& state) {
  const std::string cmd = replace_color(options_.analyze_command, state.to_move());
  const auto timeout = std::chrono::milliseconds(endpoint_.response_timeout_ms);
  const auto deadline = Clock::now() + timeout;
  auto next_line = [&]() -> std::string {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - Clock::now());
    std::optional<std::string> line;
    try {
      if (left.count() > 0) line = channel_->read_line(left);
    } catch (const ConnectionClosed&) {
      drop();
      throw;
    }
    if (!line) {
      drop();
      throw ResponseTimeout("no analysis within " +
                            std::to_string(timeout.count()) + " ms");
    }
    return *line;
  };
  try {
    channel_->write_line(cmd);
  } catch (const ConnectionClosed&) {
    drop();
    throw;
  }
  std::string head;
  do {
    head = next_line();
  } while (trim(head).empty());
  if (head[0] == '?') {
    std::string text = head + "\n";
    for (std::string l = next_line(); !trim(l).empty(); l = next_line()) {
      text += l + "\n";
    }
    throw EngineError("engine rejected '" + cmd + "': " +
                          parse_gtp_response(text).payload,
                      text);
  }
  if (head[0] != '=') {
    drop();
    throw ProtocolError("analysis did not start with '='", head);
  }
  std::string analysis;
  {
    // Some engines put the first info block on the status line.
    const std::string_view rest = trim(std::string_view(head).substr(1));
    if (rest.find("ownership") != std::string_view::npos) analysis = rest;
  }
  while (analysis.empty()) {
    std::string line = next_line();
    if (trim(line).empty()) {
      throw MalformedResponse("analysis ended without ownership", head);
    }
    const auto tokens = split_whitespace(line);
    if (std::find(tokens.begin(), tokens.end(), "ownership") != tokens.end()) {
      analysis = std::move(line);
    }
  }
  // Any new command stops the stream; the engine closes the analysis with a
  // blank line and then answers the new command.
  try {
    channel_->write_line("protocol_version");
  } catch (const ConnectionClosed&) {
    drop();
    throw;
  }
  while (!trim(next_line()).empty()) {
  }
  std::string stop;
  do {
    stop = next_line();
  } while (trim(stop).empty());
  while (!trim(next_line()).empty()) {
  }
  if (stop[0] != '=') {
    drop();
    throw ProtocolError("engine did not acknowledge the stop command", stop);
  }
  return parse_analysis_line(analysis, state.size(), state.to_move());
}

AnalysisRecord GtpSession::genmove_final_status(const GoState& state) {
  const Color me = state.to_move();
  const std::string reply =
      command(std::string("genmove ") + go::color_letter(me));
  GoMove best = GoMove::pass(me);
  if (reply != "pass" && reply != "PASS" && reply != "resign") {
    auto p = go::parse_point(reply, state.size());
    if (!p) throw MalformedResponse("genmove returned '" + reply + "'", reply);
    best = GoMove::play(me, *p);
  }
  command("undo");
  const std::string score_text = command("final_score");
  double lead = 0.0;
  if (score_text != "0") {
    if (score_text.size() < 3 || score_text[1] != '+' ||
        (score_text[0] != 'B' && score_text[0] != 'W') ||
        !parse_number(std::string_view(score_text).substr(2), lead)) {
      throw MalformedResponse("final_score returned '" + score_text + "'",
                              score_text);
    }
    if (score_text[0] == 'W') lead = -lead;
  }
  std::vector<Color> cells = state.cells();
  const std::string dead = command("final_status_list dead");
  for (auto token : split_whitespace(dead)) {
    auto p = go::parse_point(token, state.size());
    if (!p) throw MalformedResponse("bad dead stone '" + std::string(token) + "'", dead);
    const int i = state.index_of(*p);
    if (cells[i] == Color::Empty) {
      throw MalformedResponse("dead stone on empty point " + std::string(token), dead);
    }
    cells[i] = Color::Empty;
  }
  // Area ownership of the settled position.
  AnalysisRecord rec;
  rec.ownership.assign(state.area(), 0.0);
  std::vector<char> seen(state.area(), 0);
  int nb[4];
  for (int i = 0; i < state.area(); ++i) {
    if (cells[i] != Color::Empty) {
      rec.ownership[i] = cells[i] == Color::Black ? 1.0 : -1.0;
      continue;
    }
    if (seen[i]) continue;
    std::vector<int> region{i};
    seen[i] = 1;
    bool b = false, w = false;
    for (std::size_t h = 0; h < region.size(); ++h) {
      const int n = go::neighbours(state.size(), region[h], nb);
      for (int k = 0; k < n; ++k) {
        const int q = nb[k];
        if (cells[q] == Color::Black) b = true;
        if (cells[q] == Color::White) w = true;
        if (cells[q] == Color::Empty && !seen[q]) {
          seen[q] = 1;
          region.push_back(q);
        }
      }
    }
    const double v = b == w ? 0.0 : (b ? 1.0 : -1.0);
    for (int r : region) rec.ownership[r] = v;
  }
  rec.score_lead = lead;
  rec.win_rate = lead > 0 ? 1.0 : (lead < 0 ? 0.0 : 0.5);
  rec.candidates.push_back(Candidate{best, 1, rec.win_rate, lead, 1.0});
  rec.raw = reply + "\n" + score_text + "\n" + dead;
  validate_record(rec, state.size());
  return rec;
}

std::vector<Color> GtpSession::engine_board(int size) {
  const std::string text = command("showboard");
  std::vector<Color> cells(static_cast<std::size_t>(size) * size, Color::Empty);
  std::vector<char> row_seen(size + 1, 0);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    const auto tokens = split_whitespace(std::string_view(text).substr(start, end - start));
    start = end + 1;
    long long row = 0;
    if (tokens.size() < static_cast<std::size_t>(size) + 1 ||
        !parse_int(tokens[0], row) || row < 1 || row > size) {
      continue;
    }
    row_seen[row] = 1;
    for (int col = 1; col <= size; ++col) {
      std::string_view t = tokens[col];
      t = t.substr(0, t.find('('));
      Color c = Color::Empty;
      if (t == "X" || t == "x" || t == "#" || t == "B") {
        c = Color::Black;
      } else if (t == "O" || t == "o" || t == "W") {
        c = Color::White;
      } else if (t != "." && t != "+" && t != "\xe2\x80\xa2") {
        throw MalformedResponse("unknown showboard cell '" + std::string(t) + "'", text);
      }
      cells[static_cast<std::size_t>(row - 1) * size + col - 1] = c;
    }
  }
  for (int r = 1; r <= size; ++r) {
    if (!row_seen[r]) {
      throw MalformedResponse("showboard lacks row " + std::to_string(r), text);
    }
  }
  return cells;
}

}  // namespace mastermind::bridge
