#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "mastermind/bridge/endpoint.hpp"

namespace mastermind::bridge {

/// Line-oriented byte stream to an engine: a child process's stdin/stdout or
/// a TCP socket. Closing kills the child (if any) and reaps it.
class LineChannel {
 public:
  /// Throws ConnectFailed when the process cannot start or the socket cannot
  /// connect within the endpoint's connect timeout.
  static std::unique_ptr<LineChannel> open(const EngineEndpoint& endpoint);

  ~LineChannel();
  LineChannel(const LineChannel&) = delete;
  LineChannel& operator=(const LineChannel&) = delete;

  /// Writes `line` plus LF. Throws ConnectionClosed if the peer is gone.
  void write_line(std::string_view line);

  /// Next LF-terminated line without the terminator (a trailing CR is
  /// dropped too). nullopt on timeout; throws ConnectionClosed at EOF.
  std::optional<std::string> read_line(std::chrono::milliseconds timeout);

 private:
  LineChannel() = default;

  int read_fd_ = -1;
  int write_fd_ = -1;
  int child_pid_ = -1;
  std::string buffer_;
};

}  // namespace mastermind::bridge
