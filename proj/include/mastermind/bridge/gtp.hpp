#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "mastermind/bridge/analysis.hpp"
#include "mastermind/bridge/channel.hpp"
#include "mastermind/bridge/endpoint.hpp"
#include "mastermind/go/state.hpp"

namespace mastermind::bridge {

struct GtpResponse {
  bool success = false;
  std::string id;       // optional numeric id echoed by the engine
  std::string payload;  // text after "=" / "?", lines joined with LF
};

/// Parses one complete GTP response (all lines before the blank
/// terminator). Throws ProtocolError when the text is not a response.
GtpResponse parse_gtp_response(std::string_view text);

/// How positions are analysed.
///  KataAnalyze: `analyze_command` (default "kata-analyze {color} interval 10
///    ownership true") streams info lines; the first line carrying ownership
///    is used.
///  GenmoveFinalStatus: genmove + undo for the best move, final_score for
///    the lead, final_status_list dead to settle ownership.
enum class AnalysisMode { KataAnalyze, GenmoveFinalStatus };

struct GtpOptions {
  AnalysisMode mode = AnalysisMode::KataAnalyze;
  /// "{color}" is replaced with B or W for the side to move.
  std::string analyze_command = "kata-analyze {color} interval 10 ownership true";
  double komi = 7.5;
};

/// One engine connection with one command in flight at a time. The board is
/// rebuilt from scratch (boardsize, komi, clear_board, play ...) before each
/// analysis, so a failed call never leaves stale state behind. A timeout
/// kills the engine; the next call reconnects and handshakes again.
class GtpSession {
 public:
  /// Connects and runs the handshake (protocol_version, name). Throws
  /// ConnectFailed, HandshakeTimeout or ProtocolError.
  explicit GtpSession(EngineEndpoint endpoint, GtpOptions options = {});

  const std::string& engine_name() const { return name_; }
  const EngineEndpoint& endpoint() const { return endpoint_; }
  const GtpOptions& options() const { return options_; }
  /// Number of times the engine was (re)started.
  int connections() const { return connections_; }

  /// Sends one command and returns the success payload. Throws EngineError
  /// for "?" answers, ResponseTimeout, ConnectionClosed or ProtocolError.
  std::string command(std::string_view line);

  /// Replays `state` on the engine.
  void sync(const go::GoState& state);

  /// sync + analysis of the side to move; the record is in black's view.
  AnalysisRecord play_and_analyze(const go::GoState& state);

  /// The engine's board as shown by `showboard`, reduced to a stone grid.
  /// Throws EngineError if the engine has no showboard.
  std::vector<go::Color> engine_board(int size);

 private:

  void connect();
  void drop();
  std::string read_response_text(std::chrono::milliseconds timeout,
                                 std::string_view context);
  AnalysisRecord kata_analyze(const go::GoState& state);
  AnalysisRecord genmove_final_status(const go::GoState& state);

  EngineEndpoint endpoint_;
  GtpOptions options_;
  std::unique_ptr<LineChannel> channel_;
  std::string name_;
  int connections_ = 0;
};

}  // namespace mastermind::bridge
