#include "mastermind/bridge/policy.hpp"

#include <algorithm>
#include <cmath>

#include "mastermind/bridge/errors.hpp"
#include "mastermind/common/text.hpp"

namespace mastermind::bridge {

using dou::Combo;
using dou::DouState;
using dou::ScoredActions;

nlohmann::json policy_request(const DouState& state) {
  nlohmann::json history = nlohmann::json::array();
  for (const auto& play : state.history()) {
    history.push_back({{"seat", play.seat},
                       {"action", dou::action_text(play.combo)}});
  }
  nlohmann::json sizes = nlohmann::json::array();
  for (int s = 0; s < state.num_seats(); ++s) {
    sizes.push_back(state.hand(s).size());
  }
  nlohmann::json legal = nlohmann::json::array();
  for (const Combo& c : dou::legal_actions(state)) {
    legal.push_back(dou::action_text(c));
  }
  nlohmann::json dominant = nullptr;
  if (state.dominant()) {
    dominant = {{"seat", state.dominant()->seat},
                {"action", dou::action_text(state.dominant()->combo)}};
  }
  return {{"v", kPolicyProtocolVersion},
          {"seat", state.to_move()},
          {"landlord", state.landlord_seat()},
          {"hand", dou::encode_cards(state.hand(state.to_move()))},
          {"hand_sizes", sizes},
          {"history", history},
          {"dominant", dominant},
          {"legal", legal}};
}

ScoredActions parse_policy_response(std::string_view line,
                                    const DouState& state) {
  const std::string raw(line);
  if (trim(line).empty()) throw MalformedResponse("empty response line", raw);
  nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw MalformedResponse("response is not a JSON object", raw);
  }
  auto v = doc.find("v");
  if (v == doc.end() || !v->is_number_integer() ||
      v->get<long long>() != kPolicyProtocolVersion) {
    throw MalformedResponse("missing or unsupported protocol version", raw);
  }
  auto logits = doc.find("logits");
  if (logits == doc.end() || !logits->is_object() || logits->empty()) {
    throw MalformedResponse("response needs a non-empty logits object", raw);
  }
  const std::vector<Combo> legal = dou::legal_actions(state);
  ScoredActions out;
  for (auto it = logits->begin(); it != logits->end(); ++it) {
    Combo combo;
    try {
      combo = dou::parse_action(it.key());
    } catch (const std::exception&) {
      throw UnknownActionInResponse("unparseable action '" + it.key() + "'",
                                    raw);
    }
    if (std::find(legal.begin(), legal.end(), combo) == legal.end()) {
      throw UnknownActionInResponse("action '" + it.key() + "' is not legal",
                                    raw);
    }
    if (!it.value().is_number() || !std::isfinite(it.value().get<double>())) {
      throw MalformedResponse("logit for '" + it.key() + "' is not a number",
                              raw);
    }
    for (const auto& [seen, w] : out.entries) {
      if (seen == combo) {
        throw MalformedResponse("action '" + it.key() + "' listed twice", raw);
      }
    }
    out.entries.emplace_back(combo, it.value().get<double>());
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const auto& a, const auto& b) {
              return dou::canonical_less(a.first, b.first);
            });
  return out;
}

PolicyClient::PolicyClient(EngineEndpoint endpoint)
    : endpoint_(std::move(endpoint)) {
  endpoint_.validate();
}

ScoredActions PolicyClient::query(const DouState& state) {
  if (!channel_) channel_ = LineChannel::open(endpoint_);
  const std::string request = policy_request(state).dump();
  try {
    channel_->write_line(request);
    auto line = channel_->read_line(
        std::chrono::milliseconds(endpoint_.response_timeout_ms));
    if (!line) {
      channel_.reset();
      throw ResponseTimeout("policy oracle did not answer within " +
                            std::to_string(endpoint_.response_timeout_ms) +
                            " ms");
    }
    return parse_policy_response(*line, state);
  } catch (const ConnectionClosed& e) {
    channel_.reset();
    throw MalformedResponse(std::string("policy oracle hung up: ") + e.what(),
                            e.raw());
  }
}

ScoredActions policy_query(const EngineEndpoint& endpoint,
                           const DouState& state) {
  PolicyClient client(endpoint);
  return client.query(state);
}

}  // namespace mastermind::bridge
