#include <stdexcept>

#include "mastermind/bridge/endpoint.hpp"
#include "mastermind/common/text.hpp"

namespace mastermind::bridge {

EngineEndpoint EngineEndpoint::subprocess(std::vector<std::string> argv) {
  EngineEndpoint e;
  e.transport = Transport::Subprocess;
  e.command = std::move(argv);
  return e;
}

EngineEndpoint EngineEndpoint::tcp(std::string host, int port) {
  EngineEndpoint e;
  e.transport = Transport::Tcp;
  e.host = std::move(host);
  e.port = port;
  return e;
}

void EngineEndpoint::validate() const {
  if (connect_timeout_ms <= 0 || response_timeout_ms <= 0) {
    throw std::invalid_argument("engine timeouts must be positive");
  }
  if (transport == Transport::Subprocess && command.empty()) {
    throw std::invalid_argument("subprocess endpoint needs a command");
  }
  if (transport == Transport::Tcp &&
      (host.empty() || port <= 0 || port > 65535)) {
    throw std::invalid_argument("tcp endpoint needs host and port");
  }
}

std::string EngineEndpoint::describe() const {
  if (transport == Transport::Tcp) {
    return "tcp://" + host + ":" + std::to_string(port);
  }
  return join(command, " ");
}

void to_json(nlohmann::json& j, const EngineEndpoint& e) {
  j = nlohmann::json{
      {"transport", e.transport == EngineEndpoint::Transport::Tcp
                        ? "tcp"
                        : "subprocess"},
      {"connect_timeout_ms", e.connect_timeout_ms},
      {"response_timeout_ms", e.response_timeout_ms}};
  if (e.transport == EngineEndpoint::Transport::Tcp) {
    j["host"] = e.host;
    j["port"] = e.port;
  } else {
    j["command"] = e.command;
  }
}

void from_json(const nlohmann::json& j, EngineEndpoint& e) {
  e = EngineEndpoint{};
  const std::string transport = j.value("transport", "subprocess");
  if (transport == "tcp") {
    e.transport = EngineEndpoint::Transport::Tcp;
    if (j.contains("address")) {
      const std::string addr = j.at("address").get<std::string>();
      auto colon = addr.rfind(':');
      if (colon == std::string::npos) {
        throw std::invalid_argument("tcp address must be host:port");
      }
      e.host = addr.substr(0, colon);
      long long port = 0;
      if (!parse_int(addr.substr(colon + 1), port)) {
        throw std::invalid_argument("bad port in '" + addr + "'");
      }
      e.port = static_cast<int>(port);
    } else {
      e.host = j.value("host", e.host);
      e.port = j.value("port", 0);
    }
  } else if (transport == "subprocess") {
    e.transport = EngineEndpoint::Transport::Subprocess;
    const auto& cmd = j.at("command");
    if (cmd.is_string()) {
      for (auto part : split_whitespace(cmd.get<std::string>())) {
        e.command.emplace_back(part);
      }
    } else {
      e.command = cmd.get<std::vector<std::string>>();
    }
  } else {
    throw std::invalid_argument("unknown transport '" + transport + "'");
  }
  e.connect_timeout_ms = j.value("connect_timeout_ms", e.connect_timeout_ms);
  e.response_timeout_ms = j.value("response_timeout_ms", e.response_timeout_ms);
  e.validate();
}

}  // namespace mastermind::bridge
