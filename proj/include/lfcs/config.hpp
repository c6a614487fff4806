#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace lfcs {

enum class Representation { crisp, trapezoid, adaptive };

std::string to_string(Representation rep);
Representation representation_from_string(const std::string& name);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hyperparameters and run protocol for one experiment. Field names double as
// the keys of the flat key=value config-file format.
struct ExperimentConfig {
  int max_population_size = 6400;              // micro-rule capacity of [P]
  double fitness_threshold = 0.99;             // accuracy gate for subsumption and directed mutation
  double fitness_exponent = 10.0;              // power applied to fitness in selection and deletion
  double crossover_probability = 0.8;
  double mutation_probability = 0.04;          // per gene
  double deletion_fitness_fraction = 0.1;      // fraction of mean powered fitness marking low-fitness rules
  double mutation_magnitude = 0.1;             // max offset added to a gene by mutation
  double covering_max_spread = 0.2;            // max spread drawn at covering
  double ga_threshold = 50.0;                  // mean correct-set age that triggers the GA
  double deletion_experience_threshold = 50.0;
  double subsumption_experience_threshold = 50.0;
  double tournament_size_ratio = 0.4;
  double exploit_experience_threshold = 10.0;  // min experience to vote at test time
  double overlap_ratio_threshold = 0.5;        // scaling of the generality overlap test
  Representation representation = Representation::adaptive;
  bool do_correct_set_subsumption = true;
  bool do_ga_subsumption = true;
  bool do_merge = true;
  std::int64_t steps = 200000;                 // alternating train/test steps
  std::uint64_t seed = 1;

  // Throws ConfigError when any field is out of its legal range.
  void validate() const;
};

// Paper-style defaults for one representation; they differ only in the
// overlap ratio used by the generality test.
ExperimentConfig default_config_for(Representation rep);

// Flat key=value text, '#' comments and blank lines ignored.
std::map<std::string, std::string> parse_config_file(const std::string& path);

// Applies key=value overrides onto cfg. Unknown keys or unparsable values
// raise ConfigError.
void apply_config(ExperimentConfig& cfg, const std::map<std::string, std::string>& kv);

}  // namespace lfcs
