#include "lfcs/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "lfcs/inference.hpp"

namespace lfcs {
namespace {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) {
  std::uint64_t state = master + salt * 0x9E3779B97F4A7C15ULL;
  return splitmix64(state);
}

double pct(std::int64_t hits, std::int64_t total) {
  return total > 0 ? 100.0 * static_cast<double>(hits) / static_cast<double>(total) : 0.0;
}

}  // namespace

int majority_class(const std::vector<LabeledSample>& samples, int classes) {
  std::vector<std::int64_t> counts(classes, 0);
  for (const auto& s : samples) counts[s.label] += 1;
  int best = 0;
  for (int j = 1; j < classes; ++j) {
    if (counts[j] > counts[best]) best = j;
  }
  return best;
}

TrialResult run_benchmark_trial(const CheckerboardEnv& env, const ExperimentConfig& cfg,
                                const std::string& system_name,
                                const std::string& problem_name,
                                Population* out_population) {
  cfg.validate();
  RngStreams streams = RngStreams::from_master(cfg.seed);
  Trainer trainer(env.dims(), env.classes(), cfg, &streams);

  std::vector<std::int64_t> label_counts(env.classes(), 0);
  const std::int64_t steps = cfg.steps;
  const std::int64_t window = std::max<std::int64_t>(1, steps / 20);
  std::int64_t overall_hits = 0;
  std::int64_t window_hits = 0;
  std::int64_t window_total = 0;

  const auto started = std::chrono::steady_clock::now();
  for (std::int64_t t = 1; t <= steps; ++t) {
    const LabeledSample train = env.next_train(streams.env, streams.noise);
    trainer.train_step(train.x, train.label);
    label_counts[train.label] += 1;

    int fallback = 0;
    for (int j = 1; j < env.classes(); ++j) {
      if (label_counts[j] > label_counts[fallback]) fallback = j;
    }
    const LabeledSample test = env.next_test(streams.env);
    const bool hit = predict(trainer.population(), test.x, cfg, fallback) == test.label;
    if (hit) ++overall_hits;
    if (t > steps - window) {
      if (hit) ++window_hits;
      ++window_total;
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;

  TrialResult r;
  r.seed = cfg.seed;
  r.system = system_name;
  r.problem_or_fold = problem_name;
  r.overall_acc_pct = pct(overall_hits, steps);
  r.convergence_acc_pct = pct(window_hits, window_total);
  r.macro_rules = trainer.population().macro_count();
  r.micro_rules = trainer.population().micro_count();
  r.steps = steps;
  r.wall_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
  if (out_population != nullptr) *out_population = std::move(trainer.population());
  return r;
}

TrialResult run_cv_fold(const Dataset& data, const std::vector<int>& fold_of,
                        int test_fold, int epochs, const ExperimentConfig& cfg,
                        const std::string& system_name, const std::string& fold_name,
                        RngStreams& streams) {
  std::vector<std::size_t> train_idx;
  std::vector<std::size_t> test_idx;
  for (std::size_t i = 0; i < data.samples.size(); ++i) {
    (fold_of[i] == test_fold ? test_idx : train_idx).push_back(i);
  }

  std::vector<LabeledSample> train_samples;
  train_samples.reserve(train_idx.size());
  for (std::size_t i : train_idx) train_samples.push_back(data.samples[i]);
  const int fallback = majority_class(train_samples, data.classes);

  Trainer trainer(data.dims, data.classes, cfg, &streams);
  const auto started = std::chrono::steady_clock::now();
  std::vector<std::size_t> order = train_idx;
  for (int e = 0; e < epochs; ++e) {
    for (std::size_t i = order.size(); i > 1; --i) {
      const std::size_t j =
          static_cast<std::size_t>(streams.cv.uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(order[i - 1], order[j]);
    }
    for (std::size_t i : order) {
      trainer.train_step(data.samples[i].x, data.samples[i].label);
    }
  }

  std::int64_t train_hits = 0;
  for (std::size_t i : train_idx) {
    if (predict(trainer.population(), data.samples[i].x, cfg, fallback) ==
        data.samples[i].label) {
      ++train_hits;
    }
  }
  std::int64_t test_hits = 0;
  for (std::size_t i : test_idx) {
    if (predict(trainer.population(), data.samples[i].x, cfg, fallback) ==
        data.samples[i].label) {
      ++test_hits;
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;

  TrialResult r;
  r.seed = cfg.seed;
  r.system = system_name;
  r.problem_or_fold = fold_name;
  r.overall_acc_pct = pct(train_hits, static_cast<std::int64_t>(train_idx.size()));
  r.convergence_acc_pct = pct(test_hits, static_cast<std::int64_t>(test_idx.size()));
  r.macro_rules = trainer.population().macro_count();
  r.micro_rules = trainer.population().micro_count();
  r.steps = static_cast<std::int64_t>(epochs) * static_cast<std::int64_t>(train_idx.size());
  r.wall_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
  return r;
}

std::vector<TrialResult> run_cv(const Dataset& data, int folds, int repeats, int epochs,
                                const ExperimentConfig& cfg, const std::string& system_name) {
  cfg.validate();
  std::vector<TrialResult> results;
  for (int rep = 0; rep < repeats; ++rep) {
    const std::uint64_t rep_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(rep) + 1);
    RngStreams assign = RngStreams::from_master(rep_seed);
    const std::vector<int> fold_of = stratified_folds(data, folds, assign.cv);
    for (int f = 0; f < folds; ++f) {
      ExperimentConfig fold_cfg = cfg;
      fold_cfg.seed = derive_seed(rep_seed, static_cast<std::uint64_t>(f) + 1);
      RngStreams streams = RngStreams::from_master(fold_cfg.seed);
      char name[32];
      std::snprintf(name, sizeof(name), "r%df%d", rep, f);
      results.push_back(
          run_cv_fold(data, fold_of, f, epochs, fold_cfg, system_name, name, streams));
    }
  }
  return results;
}

std::string metrics_csv_header() {
  return "trial_seed,system,problem_or_fold,overall_acc_pct,convergence_acc_pct,"
         "macro_rules,micro_rules,steps,wall_ms";
}

std::string metrics_csv_row(const TrialResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%llu,%s,%s,%.4f,%.4f,%d,%lld,%lld,%.3f",
                static_cast<unsigned long long>(r.seed), r.system.c_str(),
                r.problem_or_fold.c_str(), r.overall_acc_pct, r.convergence_acc_pct,
                r.macro_rules, static_cast<long long>(r.micro_rules),
                static_cast<long long>(r.steps), r.wall_ms);
  return buf;
}

}  // namespace lfcs
