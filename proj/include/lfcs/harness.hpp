#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfcs/config.hpp"
#include "lfcs/environments.hpp"
#include "lfcs/population.hpp"
#include "lfcs/training.hpp"

namespace lfcs {

// One benchmark trial's results.
struct TrialResult {
  std::uint64_t seed = 0;
  std::string system;
  std::string problem_or_fold;
  double overall_acc_pct = 0.0;      // all test evaluations
  double convergence_acc_pct = 0.0;  // last 5% of test evaluations
  int macro_rules = 0;
  std::int64_t micro_rules = 0;
  std::int64_t steps = 0;
  double wall_ms = 0.0;
};

// Alternating explore/exploit run on a checkerboard problem: each iteration
// trains on one sample then scores one fresh test sample. Convergence
// accuracy is measured over the final 5% of iterations.
TrialResult run_benchmark_trial(const CheckerboardEnv& env, const ExperimentConfig& cfg,
                                const std::string& system_name,
                                const std::string& problem_name,
                                Population* out_population = nullptr);

// One fold of cross-validation: trains `epochs` passes over the training
// split (reshuffled per epoch), then reports train accuracy in
// overall_acc_pct and held-out test accuracy in convergence_acc_pct.
TrialResult run_cv_fold(const Dataset& data, const std::vector<int>& fold_of,
                        int test_fold, int epochs, const ExperimentConfig& cfg,
                        const std::string& system_name, const std::string& fold_name,
                        RngStreams& streams);

// Full repeated stratified cross-validation; seed r for repeat r offsets the
// master seed.
std::vector<TrialResult> run_cv(const Dataset& data, int folds, int repeats, int epochs,
                                const ExperimentConfig& cfg, const std::string& system_name);

std::string metrics_csv_header();
std::string metrics_csv_row(const TrialResult& r);

// Majority class of a labeled collection (ties to the lowest index); used
// as the inference fallback.
int majority_class(const std::vector<LabeledSample>& samples, int classes);

}  // namespace lfcs
