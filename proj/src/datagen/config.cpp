#include "mastermind/datagen/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace mastermind::datagen {

GenConfig::GenConfig() {
  for (Task t : kAllTasks) {
    mix[t] = 1.0;
    tasks[t] = TaskPlan{};
  }
}

bool GenConfig::enabled(Task task) const {
  auto w = mix.find(task);
  auto p = tasks.find(task);
  return w != mix.end() && w->second > 0.0 && p != tasks.end() &&
         p->second.trajectories > 0;
}

double GenConfig::keep_probability(Task task) const {
  double top = 0.0;
  for (const auto& [t, w] : mix) top = std::max(top, w);
  auto it = mix.find(task);
  if (it == mix.end() || top <= 0.0) return 0.0;
  return it->second / top;
}

const TaskPlan& GenConfig::plan(Task task) const {
  static const TaskPlan none{0, 0};
  auto it = tasks.find(task);
  return it == tasks.end() ? none : it->second;
}

void GenConfig::validate() const {
  if (shard_size < 1) throw std::invalid_argument("shard_size must be >= 1");
  for (const auto& [t, w] : mix) {
    if (!(w >= 0.0)) {
      throw std::invalid_argument("mix weight for " + std::string(task_name(t)) +
                                  " must be >= 0");
    }
  }
  for (const auto& [t, p] : tasks) {
    if (p.trajectories < 0 || p.max_samples < 0) {
      throw std::invalid_argument("negative counts for " +
                                  std::string(task_name(t)));
    }
  }
  if (dou.profiles.size() != 3) {
    throw std::invalid_argument("dou.profiles needs one profile per seat (3)");
  }
  for (const auto& p : dou.profiles) p.validate();
  if (!(dou.top_p > 0.0 && dou.top_p <= 1.0) ||
      !(go.top_p > 0.0 && go.top_p <= 1.0)) {
    throw std::invalid_argument("top_p must lie in (0, 1]");
  }
  if (dou.landlord_seat < 0 || dou.landlord_seat > 2) {
    throw std::invalid_argument("dou.landlord_seat must be 0, 1 or 2");
  }
  if (go.board_size < go::kMinBoardSize || go.board_size > go::kMaxBoardSize) {
    throw std::invalid_argument("go.board_size out of range");
  }
  if (go.max_moves < 1 || go.analysis_stride < 1 || go.eval_rollouts < 1) {
    throw std::invalid_argument(
        "go.max_moves, go.analysis_stride and go.eval_rollouts must be >= 1");
  }
  if (!(go.action_fraction >= 0.0 && go.action_fraction <= 1.0)) {
    throw std::invalid_argument("go.action_fraction must lie in [0, 1]");
  }
  if (!(go.theta > 0.0 && go.theta <= 1.0)) {
    throw std::invalid_argument("go.theta must lie in (0, 1]");
  }
  if (!(go.temperature > 0.0)) {
    throw std::invalid_argument("go.temperature must be positive");
  }
  if (go.annotate_last < 0) {
    throw std::invalid_argument("go.annotate_last must be >= 0");
  }
  if (go.engine) go.engine->validate();
}

namespace {

void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> keys,
                    const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + " must be an object");
  std::set<std::string> known(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items()) {
    if (!known.count(k)) {
      throw std::invalid_argument("unknown key '" + k + "' in " + where);
    }
  }
}

Task task_key(const std::string& name) {
  const auto t = parse_task(name);
  if (!t) throw std::invalid_argument("unknown task '" + name + "'");
  return *t;
}

std::string_view analysis_mode_name(bridge::AnalysisMode m) {
  return m == bridge::AnalysisMode::KataAnalyze ? "kata-analyze"
                                                : "genmove-final-status";
}

}  // namespace

void to_json(nlohmann::json& j, const GenConfig& c) {
  nlohmann::json mix = nlohmann::json::object();
  for (const auto& [t, w] : c.mix) mix[std::string(task_name(t))] = w;
  nlohmann::json tasks = nlohmann::json::object();
  for (const auto& [t, p] : c.tasks) {
    tasks[std::string(task_name(t))] = {{"trajectories", p.trajectories},
                                        {"max_samples", p.max_samples}};
  }
  nlohmann::json go = {
      {"board_size", c.go.board_size},
      {"komi", c.go.komi},
      {"top_p", c.go.top_p},
      {"max_moves", c.go.max_moves},
      {"analysis_stride", c.go.analysis_stride},
      {"eval_rollouts", c.go.eval_rollouts},
      {"theta", c.go.theta},
      {"action_fraction", c.go.action_fraction},
      {"annotate_last", c.go.annotate_last},
      {"temperature", c.go.temperature},
      {"black_tier", std::string(go::tier_name(c.go.black_tier))},
      {"white_tier", std::string(go::tier_name(c.go.white_tier))},
      {"analysis", std::string(analysis_mode_name(c.go.gtp.mode))},
      {"analyze_command", c.go.gtp.analyze_command}};
  if (c.go.engine) go["engine"] = *c.go.engine;
  std::vector<std::string> sgf;
  for (const auto& p : c.sgf_files) sgf.push_back(p.generic_string());
  j = nlohmann::json{{"seed", c.seed},
                     {"output_dir", c.output_dir.generic_string()},
                     {"shard_size", c.shard_size},
                     {"mix", mix},
                     {"tasks", tasks},
                     {"dou",
                      {{"profiles", c.dou.profiles},
                       {"top_p", c.dou.top_p},
                       {"landlord_seat", c.dou.landlord_seat}}},
                     {"go", go},
                     {"sgf_files", sgf}};
}

void from_json(const nlohmann::json& j, GenConfig& c) {
  c = GenConfig{};
  reject_unknown(j, {"seed", "output_dir", "shard_size", "mix", "tasks", "dou", "go",
                     "sgf_files"},
                 "config");
  c.seed = j.value("seed", c.seed);
  if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
  c.shard_size = j.value("shard_size", c.shard_size);
  if (j.contains("mix")) {
    c.mix.clear();
    for (const auto& [k, v] : j.at("mix").items()) c.mix[task_key(k)] = v.get<double>();
  }
  if (j.contains("tasks")) {
    for (const auto& [k, v] : j.at("tasks").items()) {
      reject_unknown(v, {"trajectories", "max_samples"}, "tasks." + k);
      TaskPlan& p = c.tasks[task_key(k)];
      p.trajectories = v.value("trajectories", p.trajectories);
      p.max_samples = v.value("max_samples", p.max_samples);
    }
  }
  if (j.contains("dou")) {
    const auto& d = j.at("dou");
    reject_unknown(d, {"profiles", "top_p", "landlord_seat"}, "dou");
    if (d.contains("profiles")) {
      c.dou.profiles = d.at("profiles").get<std::vector<dou::AgentProfile>>();
    }
    c.dou.top_p = d.value("top_p", c.dou.top_p);
    c.dou.landlord_seat = d.value("landlord_seat", c.dou.landlord_seat);
  }
  if (j.contains("go")) {
    const auto& g = j.at("go");
    reject_unknown(g, {"board_size", "komi", "top_p", "max_moves", "analysis_stride",
                       "eval_rollouts", "theta", "action_fraction", "annotate_last",
                       "temperature", "black_tier", "white_tier", "engine",
                       "analysis", "analyze_command"},
                   "go");
    c.go.board_size = g.value("board_size", c.go.board_size);
    c.go.komi = g.value("komi", c.go.komi);
    c.go.gtp.komi = c.go.komi;
    c.go.top_p = g.value("top_p", c.go.top_p);
    c.go.max_moves = g.value("max_moves", c.go.max_moves);
    c.go.analysis_stride = g.value("analysis_stride", c.go.analysis_stride);
    c.go.eval_rollouts = g.value("eval_rollouts", c.go.eval_rollouts);
    c.go.theta = g.value("theta", c.go.theta);
    c.go.action_fraction = g.value("action_fraction", c.go.action_fraction);
    c.go.annotate_last = g.value("annotate_last", c.go.annotate_last);
    c.go.temperature = g.value("temperature", c.go.temperature);
    if (g.contains("black_tier")) {
      c.go.black_tier = go::parse_tier(g.at("black_tier").get<std::string>());
    }
    if (g.contains("white_tier")) {
      c.go.white_tier = go::parse_tier(g.at("white_tier").get<std::string>());
    }
    if (g.contains("engine")) {
      c.go.engine = g.at("engine").get<bridge::EngineEndpoint>();
    }
    if (g.contains("analysis")) {
      const auto mode = g.at("analysis").get<std::string>();
      if (mode == "kata-analyze") {
        c.go.gtp.mode = bridge::AnalysisMode::KataAnalyze;
      } else if (mode == "genmove-final-status") {
        c.go.gtp.mode = bridge::AnalysisMode::GenmoveFinalStatus;
      } else {
        throw std::invalid_argument("unknown go.analysis '" + mode + "'");
      }
    }
    c.go.gtp.analyze_command = g.value("analyze_command", c.go.gtp.analyze_command);
  }
  if (j.contains("sgf_files")) {
    for (const auto& f : j.at("sgf_files")) c.sgf_files.emplace_back(f.get<std::string>());
  }
  c.validate();
}

GenConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  try {
    return nlohmann::json::parse(in).get<GenConfig>();
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace mastermind::datagen
