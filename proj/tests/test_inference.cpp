#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <memory>
#include <vector>

#include "doctest.h"
#include "lfcs/config.hpp"
#include "lfcs/inference.hpp"
#include "lfcs/population.hpp"

using namespace lfcs;

namespace {

Condition cs_condition(std::vector<CenterSpread> sets, std::vector<std::uint8_t> bits) {
  Condition c;
  for (const auto& s : sets) c.sets.emplace_back(s);
  c.indicator = std::move(bits);
  return c;
}

std::unique_ptr<Rule> make_rule(Condition cond, int cls, int classes, double fitness,
                                double experience, int numerosity = 1) {
  auto r = std::make_unique<Rule>();
  r->condition = std::move(cond);
  r->predicted_class = cls;
  r->fitness = fitness;
  r->experience = experience;
  r->numerosity = numerosity;
  r->correct_matchings.assign(classes, 0.0);
  r->class_weights.assign(classes, 0.0);
  r->class_weights[cls] = (fitness + 1.0) / 2.0;
  r->weight = r->class_weights[cls];
  return r;
}

}  // namespace

TEST_CASE("votes sum fitness times matching degree times numerosity per class") {
  Population pop(1, 2, Representation::adaptive);
  // Rectangle: mu 1, F 0.8, num 3 -> class 0 += 2.4
  pop.insert(make_rule(cs_condition({{0.5, 0.2}}, {0}), 0, 2, 0.8, 20.0, 3));
  // Triangle at x=0.45: mu 0.8, F 0.5, num 2 -> class 1 += 0.8
  pop.insert(make_rule(cs_condition({{0.5, 0.25}}, {1}), 1, 2, 0.5, 20.0, 2));

  ExperimentConfig cfg = default_config_for(Representation::adaptive);
  const std::vector<double> votes = class_votes(pop, {0.45}, cfg);
  REQUIRE(votes.size() == 2);
  CHECK(votes[0] == doctest::Approx(0.8 * 1.0 * 3.0));
  CHECK(votes[1] == doctest::Approx(0.5 * 0.8 * 2.0));
  CHECK(predict(pop, {0.45}, cfg, 1) == 0);
}

TEST_CASE("inexperienced rules are barred from voting") {
  ExperimentConfig cfg = default_config_for(Representation::adaptive);
  Population pop(1, 2, Representation::adaptive);
  // Experience exactly at the threshold does not qualify (strict >).
  pop.insert(make_rule(cs_condition({{0.5, 0.3}}, {0}), 0, 2, 1.0, cfg.exploit_experience_threshold));
  const std::vector<double> votes = class_votes(pop, {0.5}, cfg);
  CHECK(votes[0] == 0.0);
  CHECK(predict(pop, {0.5}, cfg, 1) == 1);

  pop.rules().front()->experience += 0.5;
  CHECK(class_votes(pop, {0.5}, cfg)[0] > 0.0);
  CHECK(predict(pop, {0.5}, cfg, 1) == 0);
}

TEST_CASE("non-matching rules contribute nothing") {
  ExperimentConfig cfg = default_config_for(Representation::adaptive);
  Population pop(1, 2, Representation::adaptive);
  pop.insert(make_rule(cs_condition({{0.1, 0.05}}, {0}), 0, 2, 1.0, 100.0, 50));
  const std::vector<double> votes = class_votes(pop, {0.9}, cfg);
  CHECK(votes[0] == 0.0);
  CHECK(votes[1] == 0.0);
  CHECK(predict(pop, {0.9}, cfg, 1) == 1);
}

TEST_CASE("negative fitness votes count against a class") {
  ExperimentConfig cfg = default_config_for(Representation::adaptive);
  Population pop(1, 2, Representation::adaptive);
  pop.insert(make_rule(cs_condition({{0.5, 0.3}}, {0}), 0, 2, 0.6, 100.0));
  pop.insert(make_rule(cs_condition({{0.5, 0.2}}, {0}), 0, 2, -0.8, 100.0));
  pop.insert(make_rule(cs_condition({{0.5, 0.3}}, {0}), 1, 2, 0.1, 100.0));

  const std::vector<double> votes = class_votes(pop, {0.5}, cfg);
  CHECK(votes[0] == doctest::Approx(0.6 - 0.8));
  CHECK(votes[1] == doctest::Approx(0.1));
  // Class 0's net vote is negative, so class 1 wins despite its small backing.
  CHECK(predict(pop, {0.5}, cfg, 0) == 1);
}

TEST_CASE("prediction falls back when no experienced rule matches") {
  ExperimentConfig cfg = default_config_for(Representation::adaptive);
  Population pop(2, 3, Representation::adaptive);
  CHECK(predict(pop, {0.5, 0.5}, cfg, 2) == 2);

  pop.insert(make_rule(cs_condition({{0.5, 0.3}, {0.5, 0.3}}, {0, 0}), 0, 3, 1.0, 2.0));
  CHECK(predict(pop, {0.5, 0.5}, cfg, 2) == 2);
}

TEST_CASE("vote ties resolve to the lowest class index") {
  ExperimentConfig cfg = default_config_for(Representation::adaptive);
  Population pop(1, 3, Representation::adaptive);
  pop.insert(make_rule(cs_condition({{0.5, 0.3}}, {0}), 2, 3, 0.5, 100.0, 4));
  pop.insert(make_rule(cs_condition({{0.5, 0.3}}, {0}), 1, 3, 0.5, 100.0, 4));
  const std::vector<double> votes = class_votes(pop, {0.5}, cfg);
  CHECK(votes[1] == votes[2]);
  CHECK(predict(pop, {0.5}, cfg, 0) == 1);
}

TEST_CASE("numerosity scales votes linearly") {
  ExperimentConfig cfg = default_config_for(Representation::adaptive);
  Population a(1, 2, Representation::adaptive);
  Population b(1, 2, Representation::adaptive);
  // One macro rule of numerosity 6 votes exactly like six singleton clones.
  a.insert(make_rule(cs_condition({{0.4, 0.3}}, {1}), 0, 2, 0.7, 100.0, 6));
  for (int i = 0; i < 6; ++i) {
    auto clone = make_rule(cs_condition({{0.4, 0.3}}, {1}), 0, 2, 0.7, 100.0, 1);
    // Perturb experience so duplicates stay distinct macro rules in spirit;
    // the vote only gates on the threshold.
    clone->experience = 100.0 + i;
    b.rules().push_back(std::move(clone));
  }
  for (double x : {0.2, 0.4, 0.55, 0.69}) {
    const double va = class_votes(a, {x}, cfg)[0];
    const double vb = class_votes(b, {x}, cfg)[0];
    CHECK(va == doctest::Approx(vb));
  }
}

TEST_CASE("fallback is returned when every matching vote cancels to zero") {
  ExperimentConfig cfg = default_config_for(Representation::adaptive);
  Population pop(1, 2, Representation::adaptive);
  pop.insert(make_rule(cs_condition({{0.5, 0.3}}, {0}), 0, 2, 0.5, 100.0, 2));
  pop.insert(make_rule(cs_condition({{0.5, 0.25}}, {0}), 0, 2, -0.5, 100.0, 2));
  const std::vector<double> votes = class_votes(pop, {0.5}, cfg);
  CHECK(votes[0] == 0.0);
  CHECK(votes[1] == 0.0);
  CHECK(predict(pop, {0.5}, cfg, 1) == 1);
  CHECK(predict(pop, {0.5}, cfg, 0) == 0);
}
