#include "lfcs/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

namespace lfcs {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse '" + value + "' as a number");
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("config key '" + key + "': cannot parse '" + value + "' as an integer");
  }
  return v;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("config key '" + key + "': cannot parse '" + value +
                      "' as an unsigned integer");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ConfigError("config key '" + key + "': cannot parse '" + value + "' as a boolean");
}

}  // namespace

std::string to_string(Representation rep) {
  switch (rep) {
    case Representation::crisp: return "crisp";
    case Representation::trapezoid: return "trapezoid";
    case Representation::adaptive: return "adaptive";
  }
  return "adaptive";
}

Representation representation_from_string(const std::string& name) {
  if (name == "crisp") return Representation::crisp;
  if (name == "trapezoid") return Representation::trapezoid;
  if (name == "adaptive") return Representation::adaptive;
  throw ConfigError("unknown representation '" + name +
                    "' (expected crisp, trapezoid, or adaptive)");
}

void ExperimentConfig::validate() const {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
  };
  require(max_population_size > 0, "max_population_size must be positive");
  require(fitness_threshold > 0.0 && fitness_threshold <= 1.0,
          "fitness_threshold must lie in (0, 1]");
  require(fitness_exponent > 0.0, "fitness_exponent must be positive");
  require(crossover_probability >= 0.0 && crossover_probability <= 1.0,
          "crossover_probability must lie in [0, 1]");
  require(mutation_probability >= 0.0 && mutation_probability <= 1.0,
          "mutation_probability must lie in [0, 1]");
  require(deletion_fitness_fraction >= 0.0 && deletion_fitness_fraction <= 1.0,
          "deletion_fitness_fraction must lie in [0, 1]");
  require(mutation_magnitude > 0.0, "mutation_magnitude must be positive");
  require(covering_max_spread > 0.0, "covering_max_spread must be positive");
  require(ga_threshold >= 0.0, "ga_threshold must be non-negative");
  require(deletion_experience_threshold >= 0.0,
          "deletion_experience_threshold must be non-negative");
  require(subsumption_experience_threshold >= 0.0,
          "subsumption_experience_threshold must be non-negative");
  require(tournament_size_ratio > 0.0 && tournament_size_ratio <= 1.0,
          "tournament_size_ratio must lie in (0, 1]");
  require(exploit_experience_threshold >= 0.0,
          "exploit_experience_threshold must be non-negative");
  require(overlap_ratio_threshold > 0.0 && overlap_ratio_threshold <= 1.0,
          "overlap_ratio_threshold must lie in (0, 1]");
  require(steps >= 0, "steps must be non-negative");
}

ExperimentConfig default_config_for(Representation rep) {
  ExperimentConfig cfg;
  cfg.representation = rep;
  cfg.overlap_ratio_threshold = (rep == Representation::trapezoid) ? 0.8 : 0.5;
  return cfg;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config file '" + path + "' line " + std::to_string(lineno) +
                        ": expected key=value");
    }
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config file '" + path + "' line " + std::to_string(lineno) +
                        ": empty key");
    }
    kv[key] = value;
  }
  return kv;
}

void apply_config(ExperimentConfig& cfg, const std::map<std::string, std::string>& kv) {
  const std::map<std::string, std::function<void(const std::string&, const std::string&)>>
      setters = {
          {"max_population_size",
           [&](const std::string& k, const std::string& v) {
             cfg.max_population_size = static_cast<int>(parse_int(k, v));
           }},
          {"fitness_threshold",
           [&](const std::string& k, const std::string& v) { cfg.fitness_threshold = parse_double(k, v); }},
          {"fitness_exponent",
           [&](const std::string& k, const std::string& v) { cfg.fitness_exponent = parse_double(k, v); }},
          {"crossover_probability",
           [&](const std::string& k, const std::string& v) { cfg.crossover_probability = parse_double(k, v); }},
          {"mutation_probability",
           [&](const std::string& k, const std::string& v) { cfg.mutation_probability = parse_double(k, v); }},
          {"deletion_fitness_fraction",
           [&](const std::string& k, const std::string& v) { cfg.deletion_fitness_fraction = parse_double(k, v); }},
          {"mutation_magnitude",
           [&](const std::string& k, const std::string& v) { cfg.mutation_magnitude = parse_double(k, v); }},
          {"covering_max_spread",
           [&](const std::string& k, const std::string& v) { cfg.covering_max_spread = parse_double(k, v); }},
          {"ga_threshold",
           [&](const std::string& k, const std::string& v) { cfg.ga_threshold = parse_double(k, v); }},
          {"deletion_experience_threshold",
           [&](const std::string& k, const std::string& v) { cfg.deletion_experience_threshold = parse_double(k, v); }},
          {"subsumption_experience_threshold",
           [&](const std::string& k, const std::string& v) { cfg.subsumption_experience_threshold = parse_double(k, v); }},
          {"tournament_size_ratio",
           [&](const std::string& k, const std::string& v) { cfg.tournament_size_ratio = parse_double(k, v); }},
          {"exploit_experience_threshold",
           [&](const std::string& k, const std::string& v) { cfg.exploit_experience_threshold = parse_double(k, v); }},
          {"overlap_ratio_threshold",
           [&](const std::string& k, const std::string& v) { cfg.overlap_ratio_threshold = parse_double(k, v); }},
          {"representation",
           [&](const std::string&, const std::string& v) { cfg.representation = representation_from_string(v); }},
          {"do_correct_set_subsumption",
           [&](const std::string& k, const std::string& v) { cfg.do_correct_set_subsumption = parse_bool(k, v); }},
          {"do_ga_subsumption",
           [&](const std::string& k, const std::string& v) { cfg.do_ga_subsumption = parse_bool(k, v); }},
          {"do_merge",
           [&](const std::string& k, const std::string& v) { cfg.do_merge = parse_bool(k, v); }},
          {"steps",
           [&](const std::string& k, const std::string& v) { cfg.steps = parse_int(k, v); }},
          {"seed",
           [&](const std::string& k, const std::string& v) { cfg.seed = parse_uint(k, v); }},
      };
  for (const auto& [key, value] : kv) {
    auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown config key '" + key + "'");
    it->second(key, value);
  }
  cfg.validate();
}

}  // namespace lfcs
