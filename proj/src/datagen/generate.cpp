#include "mastermind/datagen/generate.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "mastermind/bridge/gtp.hpp"
#include "mastermind/bridge/policy.hpp"
#include "mastermind/common/parallel.hpp"
#include "mastermind/common/rng.hpp"
#include "mastermind/datagen/trajectories.hpp"
#include "mastermind/evalkit/report.hpp"

namespace mastermind::datagen {

namespace fs = std::filesystem;

std::string shard_name(Task task, int index) {
  std::string name(task_name(task));
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  char suffix[16];
  std::snprintf(suffix, sizeof suffix, "-%05d.jsonl", index);
  return name + suffix;
}

namespace {

constexpr std::uint64_t kMixStream = 7;

struct Job {
  Family family;
  int trajectory;
  std::set<Task> wanted;
};

struct JobResult {
  std::optional<TrajectoryOutput> output;
  std::string error;
};

std::set<Task> wanted_tasks(const GenConfig& config, Family family, int trajectory) {
  std::set<Task> wanted;
  for (Task t : kAllTasks) {
    if (family_of(t) == family && config.enabled(t) &&
        trajectory < config.plan(t).trajectories) {
      wanted.insert(t);
    }
  }
  return wanted;
}

bool keep_sample(const GenConfig& config, Task task, const Sample& s) {
  const double p = config.keep_probability(task);
  if (p >= 1.0) return true;
  Rng coin(derive_seed(config.seed,
                       {kMixStream, static_cast<std::uint64_t>(task),
                        s.meta.at("trajectory").get<std::uint64_t>(),
                        s.meta.at("step").get<std::uint64_t>()}));
  return std::uniform_real_distribution<double>(0.0, 1.0)(coin) < p;
}

bool family_enabled(const GenConfig& config, Family family) {
  for (Task t : kAllTasks) {
    if (family_of(t) == family && config.enabled(t)) return true;
  }
  return false;
}

}  // namespace

void preflight(const GenConfig& config) {
  if (config.go.engine && family_enabled(config, Family::Go)) {
    bridge::GtpOptions options = config.go.gtp;
    options.komi = config.go.komi;
    bridge::GtpSession probe(*config.go.engine, options);
  }
  if (family_enabled(config, Family::Dou)) {
    for (const auto& p : config.dou.profiles) {
      if (p.kind == dou::AgentKind::Oracle) {
        bridge::policy_query(*p.endpoint,
                             dou::DouState::deal(config.seed, config.dou.landlord_seat));
      }
    }
  }
}

Manifest generate_dataset(const GenConfig& config, const GenerateOptions& options) {
  config.validate();
  preflight(config);

  std::vector<Job> jobs;
  for (Family family : {Family::Dou, Family::Go, Family::Sgf}) {
    int count = 0;
    for (Task t : kAllTasks) {
      if (family_of(t) == family && config.enabled(t)) {
        count = std::max(count, config.plan(t).trajectories);
      }
    }
    if (family == Family::Sgf) {
      count = std::min(count, static_cast<int>(config.sgf_files.size()));
    }
    for (int i = 0; i < count; ++i) {
      jobs.push_back({family, i, wanted_tasks(config, family, i)});
    }
  }

  std::vector<JobResult> results(jobs.size());
  parallel_for_index(jobs.size(), [&](std::size_t i) {
    const Job& job = jobs[i];
    try {
      switch (job.family) {
        case Family::Dou:
          results[i].output = dou_trajectory(config, job.trajectory, job.wanted);
          break;
        case Family::Go:
          results[i].output = go_trajectory(config, job.trajectory, job.wanted);
          break;
        case Family::Sgf:
          results[i].output = sgf_trajectory(config, job.trajectory);
          break;
      }
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  });

  Manifest manifest;
  manifest.template_version = kTemplateVersion;
  manifest.codec_version = kCodecVersion;
  manifest.token_rule = options.tokens.name;
  manifest.config = config;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (results[i].output) continue;
    manifest.skipped.push_back({std::string(family_name(jobs[i].family)),
                                jobs[i].trajectory, results[i].error});
    if (options.log) {
      *options.log << "skipping " << family_name(jobs[i].family) << " trajectory "
                   << jobs[i].trajectory << ": " << results[i].error << "\n";
    }
  }

  fs::create_directories(config.output_dir);
  for (Task task : kAllTasks) {
    if (!config.enabled(task)) continue;
    TaskSummary summary;
    for (const auto& m : evalkit::task_metrics(task)) {
      if (task == Task::GoNextState && m.key == "move_acc" &&
          config.go.action_fraction <= 0.0) {
        continue;
      }
      summary.metrics.push_back(m.label);
    }
    const std::size_t cap = static_cast<std::size_t>(config.plan(task).max_samples);

    std::vector<const Sample*> kept;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (!jobs[i].wanted.count(task)) continue;
      if (!results[i].output) {
        ++summary.failed_trajectories;
        continue;
      }
      summary.skipped_steps += results[i].output->skipped_steps;
      bool contributed = false;
      for (const Sample& s : results[i].output->samples) {
        if (s.task != task || (cap > 0 && kept.size() >= cap)) continue;
        if (!keep_sample(config, task, s)) continue;
        kept.push_back(&s);
        contributed = true;
      }
      if (contributed) ++summary.trajectories;
    }

    std::string stem(shard_name(task, 0));
    stem.resize(stem.size() - std::string("00000.jsonl").size());
    for (const auto& entry : fs::directory_iterator(config.output_dir)) {
      const std::string name = entry.path().filename().string();
      if (name.rfind(stem, 0) == 0 && entry.path().extension() == ".jsonl") {
        fs::remove(entry.path());
      }
    }

    const std::size_t per_shard = static_cast<std::size_t>(config.shard_size);
    for (std::size_t start = 0; start < kept.size(); start += per_shard) {
      const int index = static_cast<int>(start / per_shard);
      ShardInfo shard{shard_name(task, index), 0};
      std::ofstream out(config.output_dir / shard.file,
                        std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write " + shard.file);
      for (std::size_t k = start; k < std::min(kept.size(), start + per_shard); ++k) {
        out << sample_line(*kept[k]) << '\n';
        summary.tokens += options.tokens.count(kept[k]->question) +
                          options.tokens.count(kept[k]->answer);
        ++shard.lines;
      }
      summary.samples += shard.lines;
      summary.shards.push_back(shard);
    }
    manifest.tasks[task] = std::move(summary);
  }
  write_manifest(config.output_dir, manifest);
  return manifest;
}

}  // namespace mastermind::datagen
