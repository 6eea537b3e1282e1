#pragma once

#include <stdexcept>
#include <string>

namespace mastermind::bridge {

/// Base for every bridge failure. `raw()` keeps the bytes received from the
/// engine (possibly empty) for logging.
class BridgeError : public std::runtime_error {
 public:
  BridgeError(const std::string& what, std::string raw = {})
      : std::runtime_error(what), raw_(std::move(raw)) {}
  const std::string& raw() const { return raw_; }

 private:
  std::string raw_;
};

#define MM_BRIDGE_ERROR(Name)                 \
  class Name : public BridgeError {           \
   public:                                    \
    using BridgeError::BridgeError;           \
  }

MM_BRIDGE_ERROR(ConnectFailed);
MM_BRIDGE_ERROR(HandshakeTimeout);
MM_BRIDGE_ERROR(ProtocolError);
MM_BRIDGE_ERROR(EngineError);
MM_BRIDGE_ERROR(ResponseTimeout);
MM_BRIDGE_ERROR(MalformedResponse);
MM_BRIDGE_ERROR(UnknownActionInResponse);
MM_BRIDGE_ERROR(ConnectionClosed);

#undef MM_BRIDGE_ERROR

}  // namespace mastermind::bridge
