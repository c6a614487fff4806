#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "lfcs/config.hpp"
#include "lfcs/population.hpp"
#include "lfcs/rng.hpp"

using namespace lfcs;

namespace {

std::unique_ptr<Rule> make_rule(double center1, double spread1, double center2, double spread2,
                                std::uint8_t bit1, std::uint8_t bit2, int cls) {
  auto r = std::make_unique<Rule>();
  r->condition.sets = {FuzzySet{CenterSpread{center1, spread1}},
                       FuzzySet{CenterSpread{center2, spread2}}};
  r->condition.indicator = {bit1, bit2};
  r->predicted_class = cls;
  r->correct_matchings = {0.0, 0.0};
  r->class_weights = {0.5, 0.5};
  return r;
}

std::string temp_path(const char* name) {
  return std::string("/tmp/lfcs_test_") + name;
}

}  // namespace

TEST_CASE("defaults differ per representation only in the overlap ratio") {
  const ExperimentConfig adaptive = default_config_for(Representation::adaptive);
  const ExperimentConfig trapezoid = default_config_for(Representation::trapezoid);
  const ExperimentConfig crisp = default_config_for(Representation::crisp);
  CHECK(adaptive.overlap_ratio_threshold == 0.5);
  CHECK(crisp.overlap_ratio_threshold == 0.5);
  CHECK(trapezoid.overlap_ratio_threshold == 0.8);
  CHECK(adaptive.max_population_size == 6400);
  CHECK(adaptive.fitness_threshold == 0.99);
  CHECK(adaptive.fitness_exponent == 10.0);
  CHECK(adaptive.crossover_probability == 0.8);
  CHECK(adaptive.mutation_probability == 0.04);
  CHECK(adaptive.deletion_fitness_fraction == 0.1);
  CHECK(adaptive.mutation_magnitude == 0.1);
  CHECK(adaptive.covering_max_spread == 0.2);
  CHECK(adaptive.ga_threshold == 50.0);
  CHECK(adaptive.deletion_experience_threshold == 50.0);
  CHECK(adaptive.subsumption_experience_threshold == 50.0);
  CHECK(adaptive.tournament_size_ratio == 0.4);
  CHECK(adaptive.exploit_experience_threshold == 10.0);
}

TEST_CASE("config validation rejects out-of-range values") {
  ExperimentConfig cfg = default_config_for(Representation::adaptive);
  CHECK_NOTHROW(cfg.validate());
  cfg.max_population_size = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = default_config_for(Representation::adaptive);
  cfg.tournament_size_ratio = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = default_config_for(Representation::adaptive);
  cfg.crossover_probability = 1.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = default_config_for(Representation::adaptive);
  cfg.steps = -1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("config files are flat key=value text with comments") {
  const std::string path = temp_path("config.cfg");
  {
    std::ofstream out(path);
    out << "# a comment\n\n"
        << "fitness_exponent = 1\n"
        << "fitness_threshold=0.95\n"
        << "representation = trapezoid\n"
        << "do_merge = false\n"
        << "seed=99\n";
  }
  ExperimentConfig cfg = default_config_for(Representation::adaptive);
  apply_config(cfg, parse_config_file(path));
  CHECK(cfg.fitness_exponent == 1.0);
  CHECK(cfg.fitness_threshold == 0.95);
  CHECK(cfg.representation == Representation::trapezoid);
  CHECK(cfg.do_merge == false);
  CHECK(cfg.seed == 99);

  SUBCASE("unknown keys are rejected") {
    std::ofstream out(path);
    out << "no_such_key=1\n";
    out.close();
    ExperimentConfig fresh = default_config_for(Representation::adaptive);
    CHECK_THROWS_AS(apply_config(fresh, parse_config_file(path)), ConfigError);
  }
  SUBCASE("unparsable values are rejected") {
    std::ofstream out(path);
    out << "fitness_exponent=ten\n";
    out.close();
    ExperimentConfig fresh = default_config_for(Representation::adaptive);
    CHECK_THROWS_AS(apply_config(fresh, parse_config_file(path)), ConfigError);
  }
  SUBCASE("lines without '=' are rejected") {
    std::ofstream out(path);
    out << "just some words\n";
    out.close();
    CHECK_THROWS_AS(parse_config_file(path), ConfigError);
  }
  CHECK_THROWS_AS(parse_config_file("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("representation names round-trip") {
  for (Representation rep :
       {Representation::crisp, Representation::trapezoid, Representation::adaptive}) {
    CHECK(representation_from_string(to_string(rep)) == rep);
  }
  CHECK_THROWS_AS(representation_from_string("cubic"), ConfigError);
}

TEST_CASE("inserting a duplicate condition absorbs into numerosity") {
  Population pop(2, 2, Representation::adaptive);
  Rule& first = pop.insert(make_rule(0.5, 0.2, 0.5, 0.2, 1, 0, 0));
  CHECK(pop.macro_count() == 1);
  CHECK(pop.micro_count() == 1);

  pop.insert(make_rule(0.5, 0.2, 0.5, 0.2, 1, 0, 0));
  CHECK(pop.macro_count() == 1);
  CHECK(pop.micro_count() == 2);
  CHECK(first.numerosity == 2);

  SUBCASE("a novel condition appends a macro rule") {
    pop.insert(make_rule(0.4, 0.2, 0.5, 0.2, 1, 0, 0));
    CHECK(pop.macro_count() == 2);
    CHECK(pop.micro_count() == 3);
  }
  SUBCASE("differing only in an indicator bit is novel") {
    pop.insert(make_rule(0.5, 0.2, 0.5, 0.2, 0, 0, 0));
    CHECK(pop.macro_count() == 2);
  }
  SUBCASE("same condition with a different class is novel") {
    pop.insert(make_rule(0.5, 0.2, 0.5, 0.2, 1, 0, 1));
    CHECK(pop.macro_count() == 2);
  }
}

TEST_CASE("removing an absent rule is a contract violation") {
  Population pop(2, 2, Representation::adaptive);
  Rule& r = pop.insert(make_rule(0.5, 0.2, 0.5, 0.2, 1, 0, 0));
  Rule detached;
  CHECK_THROWS_AS(pop.remove(&detached), std::logic_error);
  pop.remove(&r);
  CHECK(pop.macro_count() == 0);
}

TEST_CASE("ruleset snapshots round-trip every serialized field") {
  Population pop(2, 3, Representation::adaptive);
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto r = std::make_unique<Rule>();
    r->condition.sets = {FuzzySet{CenterSpread{rng.uniform(0.0, 1.0), rng.uniform(0.005, 1.0)}},
                         FuzzySet{CenterSpread{rng.uniform(0.0, 1.0), rng.uniform(0.005, 1.0)}}};
    r->condition.indicator = {static_cast<std::uint8_t>(rng.uniform_int(0, 1)),
                              static_cast<std::uint8_t>(rng.uniform_int(0, 1))};
    r->predicted_class = static_cast<int>(rng.uniform_int(0, 2));
    r->fitness = rng.uniform(-1.0, 1.0);
    r->experience = rng.uniform(0.0, 500.0);
    r->numerosity = static_cast<int>(rng.uniform_int(1, 40));
    const double a = rng.uniform(0.0, 1.0);
    const double b = rng.uniform(0.0, 1.0 - a);
    r->class_weights = {a, b, 1.0 - a - b};
    r->correct_matchings = {a * r->experience, b * r->experience, (1.0 - a - b) * r->experience};
    pop.insert(std::move(r));
  }

  const std::string path = temp_path("snapshot.txt");
  pop.save(path);
  Population loaded = Population::load(path);

  REQUIRE(loaded.macro_count() == pop.macro_count());
  CHECK(loaded.dims() == 2);
  CHECK(loaded.class_count() == 3);
  CHECK(loaded.representation() == Representation::adaptive);
  for (int i = 0; i < pop.macro_count(); ++i) {
    const Rule& a = *pop.rules()[i];
    const Rule& b = *loaded.rules()[i];
    CHECK(a.condition == b.condition);
    CHECK(a.predicted_class == b.predicted_class);
    CHECK(bits_equal(a.fitness, b.fitness));
    CHECK(bits_equal(a.experience, b.experience));
    CHECK(a.numerosity == b.numerosity);
    for (std::size_t j = 0; j < a.class_weights.size(); ++j) {
      CHECK(bits_equal(a.class_weights[j], b.class_weights[j]));
    }
  }

  SUBCASE("trapezoid populations round-trip too") {
    Population tpop(2, 2, Representation::trapezoid);
    auto r = std::make_unique<Rule>();
    r->condition.sets = {FuzzySet{Trapezoid{-0.125, 0.25, 0.5, 1.25}},
                         FuzzySet{Trapezoid{0.1, 0.3, 0.7, 0.9}}};
    r->predicted_class = 1;
    r->fitness = 0.75;
    r->experience = 12.0;
    r->class_weights = {0.125, 0.875};
    r->correct_matchings = {1.5, 10.5};
    tpop.insert(std::move(r));
    const std::string tpath = temp_path("snapshot_tz.txt");
    tpop.save(tpath);
    Population tloaded = Population::load(tpath);
    REQUIRE(tloaded.macro_count() == 1);
    CHECK(tloaded.representation() == Representation::trapezoid);
    CHECK(tloaded.rules()[0]->condition == tpop.rules()[0]->condition);
  }
}

TEST_CASE("snapshot loading rejects malformed input") {
  CHECK_THROWS(Population::load("/nonexistent/ruleset.txt"));
  const std::string path = temp_path("bad_snapshot.txt");
  {
    std::ofstream out(path);
    out << "not a header\n";
  }
  CHECK_THROWS(Population::load(path));
  {
    std::ofstream out(path);
    out << "2 2 adaptive\ncs 0.5 0.2\n";  // truncated rule line
  }
  CHECK_THROWS(Population::load(path));
}
