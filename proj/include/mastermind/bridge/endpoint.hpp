#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace mastermind::bridge {

/// Where an external engine lives and how long to wait for it.
struct EngineEndpoint {
  enum class Transport { Subprocess, Tcp };

  Transport transport = Transport::Subprocess;
  /// argv for Subprocess.
  std::vector<std::string> command;
  /// host/port for Tcp.
  std::string host = "127.0.0.1";
  int port = 0;
  int connect_timeout_ms = 5000;
  int response_timeout_ms = 30000;

  static EngineEndpoint subprocess(std::vector<std::string> argv);
  static EngineEndpoint tcp(std::string host, int port);

  /// Throws std::invalid_argument when timeouts are not positive or the
  /// address is missing.
  void validate() const;
  std::string describe() const;
};

void to_json(nlohmann::json& j, const EngineEndpoint& e);
void from_json(const nlohmann::json& j, EngineEndpoint& e);

}  // namespace mastermind::bridge
