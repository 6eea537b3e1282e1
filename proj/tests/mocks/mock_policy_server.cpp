// Line-oriented Doudizhu policy oracle for bridge and agent tests.
//   --mode ok             logits -0.5 * (position in the legal list)
//   --mode unknown-action names a combo that is not legal
//   --mode garbage        answers with text that is not JSON
//   --mode hang           reads requests and never answers
//   --mode close          exits on the first request
#include <chrono>
#include <iostream>
#include <string>
#include <thread>

#include "json.hpp"

int main(int argc, char** argv) {
  std::string mode = "ok";
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--mode") mode = argv[i + 1];
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (mode == "close") return 0;
    if (mode == "hang") {
      std::this_thread::sleep_for(std::chrono::hours(1));
      return 0;
    }
    if (mode == "garbage") {
      std::cout << "not json at all\n" << std::flush;
      continue;
    }
    const auto request = nlohmann::json::parse(line, nullptr, false);
    nlohmann::json logits = nlohmann::json::object();
    if (mode == "unknown-action") {
      logits["3 4"] = 1.0;
    } else if (!request.is_discarded() && request.contains("legal")) {
      double logit = 0.0;
      for (const auto& a : request["legal"]) {
        logits[a.get<std::string>()] = logit;
        logit -= 0.5;
      }
    }
    std::cout << nlohmann::json{{"v", 1}, {"logits", logits}}.dump() << "\n"
              << std::flush;
  }
  return 0;
}
