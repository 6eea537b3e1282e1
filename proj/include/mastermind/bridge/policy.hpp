#pragma once

#include <memory>
#include <string_view>

#include "json.hpp"
#include "mastermind/bridge/channel.hpp"
#include "mastermind/bridge/endpoint.hpp"
#include "mastermind/dou/scored_actions.hpp"
#include "mastermind/dou/state.hpp"

namespace mastermind::bridge {

// Doudizhu policy protocol, one JSON object per line in each direction.
//
//   request  {"v":1,"seat":0,"landlord":0,"hand":"3 3 14",
//             "hand_sizes":[20,17,17],
//             "history":[{"seat":2,"action":"5"},{"seat":0,"action":"pass"}],
//             "dominant":{"seat":2,"action":"5"} | null,
//             "legal":["pass","14"]}
//   response {"v":1,"logits":{"14":1.25,"pass":-0.5}}
//
// Action strings use the card codec ("3 3" etc.) and "pass". The response
// may omit legal actions but may not name anything else.
inline constexpr int kPolicyProtocolVersion = 1;

nlohmann::json policy_request(const dou::DouState& state);

/// Raw logits as ScoredActions in canonical order. Throws MalformedResponse
/// or UnknownActionInResponse; never anything else.
dou::ScoredActions parse_policy_response(std::string_view line,
                                         const dou::DouState& state);

/// A connection to one policy oracle. After a timeout the channel is dropped
/// and the next query reconnects.
class PolicyClient {
 public:
  explicit PolicyClient(EngineEndpoint endpoint);

  dou::ScoredActions query(const dou::DouState& state);

 private:
  EngineEndpoint endpoint_;
  std::unique_ptr<LineChannel> channel_;
};

/// One-shot convenience: connect, query, disconnect.
dou::ScoredActions policy_query(const EngineEndpoint& endpoint,
                                const dou::DouState& state);

}  // namespace mastermind::bridge
