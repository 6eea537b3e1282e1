#include "mastermind/datagen/trajectories.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>

#include "mastermind/bridge/gtp.hpp"
#include "mastermind/common/rng.hpp"
#include "mastermind/common/text.hpp"
#include "mastermind/go/sgf.hpp"

namespace mastermind::datagen {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Dou:
      return "dou-selfplay";
    case Family::Go:
      return "go-selfplay";
    case Family::Sgf:
      return "sgf";
  }
  return "";
}

Family family_of(Task task) {
  if (is_dou_task(task)) return Family::Dou;
  if (task == Task::GoStateExpl) return Family::Sgf;
  return Family::Go;
}

std::uint64_t trajectory_seed(const GenConfig& config, Family family,
                              int trajectory) {
  return derive_seed(config.seed, {static_cast<std::uint64_t>(family),
                                   static_cast<std::uint64_t>(trajectory)});
}

namespace {

nlohmann::json base_meta(Family family, int trajectory, std::uint64_t seed,
                         int step, Task task) {
  return {{"family", std::string(family_name(family))},
          {"trajectory", trajectory},
          {"step", step},
          {"seed", seed},
          {"task", std::string(task_name(task))},
          {"template_version", kTemplateVersion}};
}

// Seed streams inside one trajectory.
constexpr std::uint64_t kDealStream = 0;
constexpr std::uint64_t kMoveStream = 0;
constexpr std::uint64_t kVariantStream = 1;
constexpr std::uint64_t kEvalStream = 2;

}  // namespace

TrajectoryOutput dou_trajectory(const GenConfig& config, int trajectory,
                                const std::set<Task>& wanted) {
  const std::uint64_t seed = trajectory_seed(config, Family::Dou, trajectory);
  const int n_seats = 3;
  std::vector<dou::Agent> agents;
  std::vector<dou::Agent*> seat_agents;
  nlohmann::json profiles = nlohmann::json::array();
  for (int s = 0; s < n_seats; ++s) {
    agents.emplace_back(
        config.dou.profiles[s].reseeded({seed, static_cast<std::uint64_t>(s)}));
    profiles.push_back(agents.back().profile().describe());
  }
  for (auto& a : agents) seat_agents.push_back(&a);

  std::vector<dou::DouState> states;
  std::vector<dou::Combo> moves;
  dou::DouState state =
      dou::DouState::deal(derive_seed(seed, {kDealStream}), config.dou.landlord_seat);
  while (!dou::is_terminal(state)) {
    const dou::Combo a = agents[state.to_move()].act(state);
    states.push_back(state);
    moves.push_back(a);
    state = dou::apply_action(state, a);
  }

  TrajectoryOutput out;
  const bool want_choice =
      wanted.count(Task::DouProb) || wanted.count(Task::DouNoProb);
  for (std::size_t t = 0; t < states.size(); ++t) {
    const dou::DouState& s = states[t];
    if (dou::legal_actions(s).size() < 2) {
      ++out.skipped_steps;
      continue;
    }
    const dou::Combo& chosen = moves[t];
    auto meta_for = [&](Task task) {
      nlohmann::json m = base_meta(Family::Dou, trajectory, seed,
                                   static_cast<int>(t), task);
      m["profiles"] = profiles;
      m["seat"] = s.to_move();
      return m;
    };
    if (want_choice) {
      const dou::ScoredActions dist = agents[s.to_move()].distribution(s);
      std::vector<dou::Combo> picks = dou::top_p_filter(dist, config.dou.top_p);
      if (std::find(picks.begin(), picks.end(), chosen) == picks.end()) {
        picks.push_back(chosen);
      }
      std::vector<DouCandidate> candidates;
      for (const auto& c : picks) {
        DouCandidate cand{c, {}};
        for (const auto& r : dou::predict_opponent_responses(s, c, seat_agents)) {
          cand.responses.push_back(r.argmax);
        }
        candidates.push_back(std::move(cand));
      }
      for (Task task : {Task::DouProb, Task::DouNoProb}) {
        if (!wanted.count(task)) continue;
        Sample sample =
            build_dou_sample(s, candidates, chosen, task == Task::DouProb);
        sample.meta = meta_for(task);
        out.samples.push_back(std::move(sample));
      }
    }
    if (wanted.count(Task::DouPredProb)) {
      std::vector<dou::Combo> observed;
      for (std::size_t k = t + 1; k < moves.size() && k <= t + 2; ++k) {
        observed.push_back(moves[k]);
      }
      if (!observed.empty()) {
        Sample sample = build_dou_pred_sample(s, chosen, observed);
        sample.meta = meta_for(Task::DouPredProb);
        out.samples.push_back(std::move(sample));
      }
    }
  }
  return out;
}

TrajectoryOutput go_trajectory(const GenConfig& config, int trajectory,
                               const std::set<Task>& wanted) {
  const GoSettings& g = config.go;
  const std::uint64_t seed = trajectory_seed(config, Family::Go, trajectory);
  Rng rng(derive_seed(seed, {kMoveStream}));
  go::GoTier black = g.black_tier;
  go::GoTier white = g.white_tier;
  if (trajectory % 2 == 1) std::swap(black, white);

  std::unique_ptr<bridge::GtpSession> engine;
  if (g.engine) {
    bridge::GtpOptions options = g.gtp;
    options.komi = g.komi;
    engine = std::make_unique<bridge::GtpSession>(*g.engine, options);
  }

  std::vector<go::GoState> states;
  std::vector<go::GoMove> moves;
  std::vector<std::optional<bridge::AnalysisRecord>> analyses;
  go::GoState state = go::GoState::empty(g.board_size);
  for (int n = 0; n < g.max_moves && state.consecutive_passes() < 2; ++n) {
    go::MoveDistribution dist;
    std::optional<bridge::AnalysisRecord> record;
    if (engine) {
      record = engine->play_and_analyze(state);
      dist = go::distribution_from_analysis(*record);
    } else {
      dist = go::heuristic_policy(state, rng, g.temperature);
    }
    const go::GoTier tier = state.to_move() == go::Color::Black ? black : white;
    go::GoMove move = dist.entries.empty() ? go::GoMove::pass(state.to_move())
                                           : go::select_move(dist, tier, g.top_p, rng);
    if (move.color != state.to_move() || go::illegal_reason(state, move)) {
      move = go::GoMove::pass(state.to_move());
    }
    states.push_back(state);
    moves.push_back(move);
    analyses.push_back(std::move(record));
    state = go::apply_move(state, move);
  }

  nlohmann::json tiers = {{"black", std::string(go::tier_name(black))},
                          {"white", std::string(go::tier_name(white))}};
  TrajectoryOutput out;
  for (std::size_t t = 0; t < states.size(); ++t) {
    auto meta_for = [&](Task task) {
      nlohmann::json m =
          base_meta(Family::Go, trajectory, seed, static_cast<int>(t), task);
      m["tiers"] = tiers;
      m["board_size"] = g.board_size;
      return m;
    };
    if (wanted.count(Task::GoNextState)) {
      Rng coin(derive_seed(seed, {kVariantStream, t}));
      const bool action_variant =
          std::uniform_real_distribution<double>(0.0, 1.0)(coin) < g.action_fraction;
      const go::GoState after = go::apply_move(states[t], moves[t]);
      Sample sample =
          action_variant
              ? build_go_action_sample(states[t], after, g.annotate_last)
              : build_go_next_state_sample(states[t], moves[t], g.annotate_last);
      sample.meta = meta_for(Task::GoNextState);
      sample.meta["variant"] = action_variant ? "move" : "board";
      out.samples.push_back(std::move(sample));
    }
    if (wanted.count(Task::GoAnalysis) && t % g.analysis_stride == 0) {
      go::PositionEval eval;
      if (analyses[t]) {
        eval = go::eval_from_analysis(*analyses[t], g.board_size, g.komi, g.theta);
      } else {
        eval = go::evaluate_position(
            states[t], go::EvalConfig{g.eval_rollouts, derive_seed(seed, {kEvalStream, t}),
                                      g.komi, g.theta});
      }
      Sample sample = build_go_analysis_sample(states[t], eval);
      sample.meta = meta_for(Task::GoAnalysis);
      sample.meta["eval_source"] = std::string(go::source_name(eval.source));
      out.samples.push_back(std::move(sample));
    }
  }
  return out;
}

TrajectoryOutput sgf_trajectory(const GenConfig& config, int trajectory) {
  const auto& path = config.sgf_files.at(static_cast<std::size_t>(trajectory));
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  const go::SgfRecord record = go::load_sgf(bytes);
  const std::uint64_t seed = trajectory_seed(config, Family::Sgf, trajectory);

  TrajectoryOutput out;
  auto emit = [&](const go::GoState& state, const std::string& comment, int step) {
    if (trim(comment).empty()) {
      ++out.skipped_steps;
      return;
    }
    Sample sample = build_go_expl_sample(state, comment);
    sample.meta = base_meta(Family::Sgf, trajectory, seed, step, Task::GoStateExpl);
    sample.meta["source"] = path.filename().generic_string();
    out.samples.push_back(std::move(sample));
  };
  emit(record.initial, record.root_comment, 0);
  for (std::size_t i = 0; i < record.steps.size(); ++i) {
    emit(record.steps[i].after, record.steps[i].comment, static_cast<int>(i) + 1);
  }
  return out;
}

Sample regenerate_sample(const GenConfig& config, const nlohmann::json& meta) {
  const auto task = parse_task(meta.at("task").get<std::string>());
  if (!task) throw std::invalid_argument("meta names an unknown task");
  const int trajectory = meta.at("trajectory").get<int>();
  const int step = meta.at("step").get<int>();
  if (trajectory < 0) throw std::invalid_argument("negative trajectory index");
  TrajectoryOutput out;
  switch (family_of(*task)) {
    case Family::Dou:
      out = dou_trajectory(config, trajectory, {*task});
      break;
    case Family::Go:
      out = go_trajectory(config, trajectory, {*task});
      break;
    case Family::Sgf:
      if (static_cast<std::size_t>(trajectory) >= config.sgf_files.size()) {
        throw std::invalid_argument("meta names a missing SGF file");
      }
      out = sgf_trajectory(config, trajectory);
      break;
  }
  for (auto& s : out.samples) {
    if (s.meta.at("step").get<int>() == step) return std::move(s);
  }
  throw std::invalid_argument("trajectory has no " + std::string(task_name(*task)) +
                              " sample at step " + std::to_string(step));
}

}  // namespace mastermind::datagen
