#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lfcs/config.hpp"
#include "lfcs/environments.hpp"
#include "lfcs/harness.hpp"
#include "lfcs/inference.hpp"
#include "lfcs/render.hpp"

namespace {

struct CommonOptions {
  std::string system;
  std::string config_path;
  std::string out_dir = ".";
  std::int64_t steps = -1;
  std::int64_t seed = -1;
};

// Defaults for the chosen system, overlaid with the config file, overlaid
// with explicit CLI flags.
lfcs::ExperimentConfig resolve_config(const CommonOptions& opt) {
  std::map<std::string, std::string> kv;
  if (!opt.config_path.empty()) kv = lfcs::parse_config_file(opt.config_path);

  lfcs::Representation rep = lfcs::Representation::adaptive;
  if (!opt.system.empty()) {
    rep = lfcs::representation_from_string(opt.system);
  } else if (auto it = kv.find("representation"); it != kv.end()) {
    rep = lfcs::representation_from_string(it->second);
  }
  lfcs::ExperimentConfig cfg = lfcs::default_config_for(rep);
  lfcs::apply_config(cfg, kv);
  if (!opt.system.empty()) cfg.representation = rep;
  if (opt.steps >= 0) cfg.steps = opt.steps;
  if (opt.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opt.seed);
  cfg.validate();
  return cfg;
}

void write_metrics(const std::string& out_dir, const std::vector<lfcs::TrialResult>& results) {
  std::filesystem::create_directories(out_dir);
  const std::string path = out_dir + "/metrics.csv";
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << lfcs::metrics_csv_header() << '\n';
  for (const auto& r : results) out << lfcs::metrics_csv_row(r) << '\n';
  std::cout << lfcs::metrics_csv_header() << '\n';
  for (const auto& r : results) std::cout << lfcs::metrics_csv_row(r) << '\n';
  std::cout << "wrote " << path << '\n';
}

int run_bench(const CommonOptions& opt, const std::string& problem, int trials,
              bool save_rulesets) {
  lfcs::ExperimentConfig cfg = resolve_config(opt);
  const bool rotated = problem == "rcb";
  const bool noisy = problem == "ncb";
  const lfcs::CheckerboardEnv env(5, rotated, noisy);

  std::vector<lfcs::TrialResult> results;
  for (int i = 0; i < trials; ++i) {
    lfcs::ExperimentConfig trial_cfg = cfg;
    trial_cfg.seed = cfg.seed + static_cast<std::uint64_t>(i);
    lfcs::Population pop;
    results.push_back(lfcs::run_benchmark_trial(env, trial_cfg,
                                                lfcs::to_string(trial_cfg.representation),
                                                problem, &pop));
    if (save_rulesets) {
      std::filesystem::create_directories(opt.out_dir);
      char name[128];
      std::snprintf(name, sizeof(name), "%s/ruleset_%s_%s_seed%llu.txt", opt.out_dir.c_str(),
                    lfcs::to_string(trial_cfg.representation).c_str(), problem.c_str(),
                    static_cast<unsigned long long>(trial_cfg.seed));
      pop.save(name);
      std::cout << "wrote " << name << '\n';
    }
  }
  write_metrics(opt.out_dir, results);
  return 0;
}

int run_cv_command(const CommonOptions& opt, const std::string& data_path, int folds,
                   int repeats, int epochs) {
  lfcs::ExperimentConfig cfg = resolve_config(opt);
  // Dataset runs default to full-range covering spreads so single covered
  // rules can span an attribute; a config file still overrides this.
  const bool file_sets_spread =
      !opt.config_path.empty() &&
      lfcs::parse_config_file(opt.config_path).count("covering_max_spread") > 0;
  if (!file_sets_spread) cfg.covering_max_spread = 1.0;
  const lfcs::Dataset data = lfcs::load_dataset(data_path);
  const std::vector<lfcs::TrialResult> results =
      lfcs::run_cv(data, folds, repeats, epochs, cfg, lfcs::to_string(cfg.representation));
  write_metrics(opt.out_dir, results);

  double mean_test = 0.0;
  for (const auto& r : results) mean_test += r.convergence_acc_pct;
  if (!results.empty()) mean_test /= static_cast<double>(results.size());
  std::printf("mean test accuracy over %zu folds: %.2f%%\n", results.size(), mean_test);
  return 0;
}

int run_render(const std::string& snapshot, bool classes, const std::vector<int>& matching,
               int resolution, const std::string& out_path) {
  lfcs::Population pop = lfcs::Population::load(snapshot);
  lfcs::GrayImage img;
  if (classes) {
    lfcs::ExperimentConfig cfg = lfcs::default_config_for(pop.representation());
    img = lfcs::render_class_landscape(pop, cfg, resolution, 0);
  } else {
    img = lfcs::render_matching_landscape(pop, matching, resolution);
  }
  lfcs::write_pgm(img, out_path);
  std::cout << "wrote " << out_path << " (" << resolution << "x" << resolution << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Michigan-style supervised fuzzy classifier systems: checkerboard benchmarks, "
               "dataset cross-validation, and landscape rendering"};
  app.require_subcommand(1);

  CommonOptions bench_opt;
  std::string bench_problem = "cb";
  int bench_trials = 1;
  bool bench_no_rulesets = false;
  CLI::App* bench = app.add_subcommand("bench", "Run checkerboard benchmark trials");
  bench->add_option("--problem", bench_problem, "Problem: cb, rcb, or ncb")
      ->check(CLI::IsMember({"cb", "rcb", "ncb"}));
  bench->add_option("--system", bench_opt.system, "Representation: crisp, trapezoid, or adaptive")
      ->check(CLI::IsMember({"crisp", "trapezoid", "adaptive"}));
  bench->add_option("--steps", bench_opt.steps, "Alternating train/test steps per trial");
  bench->add_option("--trials", bench_trials, "Number of trials (seeds seed, seed+1, ...)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_opt.seed, "Master seed of the first trial");
  bench->add_option("--config", bench_opt.config_path, "key=value config file");
  bench->add_option("--out-dir", bench_opt.out_dir, "Output directory for metrics and rulesets");
  bench->add_flag("--no-rulesets", bench_no_rulesets, "Skip writing final ruleset snapshots");

  CommonOptions cv_opt;
  std::string cv_data;
  int cv_folds = 10;
  int cv_repeats = 3;
  int cv_epochs = 20;
  CLI::App* cv = app.add_subcommand("cv", "Run repeated stratified cross-validation on a dataset");
  cv->add_option("--data", cv_data, "Dataset file (delimited text, header, last column = label)")
      ->required();
  cv->add_option("--system", cv_opt.system, "Representation: crisp, trapezoid, or adaptive")
      ->check(CLI::IsMember({"crisp", "trapezoid", "adaptive"}));
  cv->add_option("--folds", cv_folds, "Folds per repeat")->check(CLI::PositiveNumber);
  cv->add_option("--repeats", cv_repeats, "Independently shuffled repeats")
      ->check(CLI::PositiveNumber);
  cv->add_option("--epochs", cv_epochs, "Training passes per fold")->check(CLI::PositiveNumber);
  cv->add_option("--seed", cv_opt.seed, "Master seed");
  cv->add_option("--config", cv_opt.config_path, "key=value config file");
  cv->add_option("--out-dir", cv_opt.out_dir, "Output directory for metrics");

  std::string render_snapshot;
  std::string render_out = "landscape.pgm";
  bool render_classes = false;
  std::vector<int> render_matching;
  int render_resolution = 200;
  CLI::App* render = app.add_subcommand("render", "Render a landscape from a ruleset snapshot");
  render->add_option("--snapshot", render_snapshot, "Ruleset snapshot file")->required();
  CLI::Option* classes_flag =
      render->add_flag("--classes", render_classes, "Render the predicted-class landscape");
  render->add_option("--matching", render_matching,
                     "Render the matching-degree landscape of these rule indices")
      ->excludes(classes_flag);
  render->add_option("--resolution", render_resolution, "Image width and height")
      ->check(CLI::PositiveNumber);
  render->add_option("--out", render_out, "Output PGM file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bench->parsed()) {
      return run_bench(bench_opt, bench_problem, bench_trials, !bench_no_rulesets);
    }
    if (cv->parsed()) {
      return run_cv_command(cv_opt, cv_data, cv_folds, cv_repeats, cv_epochs);
    }
    if (render->parsed()) {
      if (!render_classes && render_matching.empty()) {
        std::cerr << "render: pass --classes or --matching IDX...\n";
        return 2;
      }
      return run_render(render_snapshot, render_classes, render_matching, render_resolution,
                        render_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
