#include "lfcs/training.hpp"

#include <algorithm>
#include <cmath>

#include "lfcs/evolution.hpp"
#include "lfcs/subsumption.hpp"

namespace lfcs {

RuleSet build_match_set(Population& pop, const Sample& x) {
  RuleSet match_set;
  for (const auto& rule : pop.rules()) {
    const double mu = matching_degree(rule->condition, x);
    if (mu > 0.0) match_set.push_back({rule.get(), mu});
  }
  return match_set;
}

RuleSet build_correct_set(const RuleSet& match_set, int label) {
  RuleSet correct_set;
  for (const SetMember& m : match_set) {
    if (m.rule->predicted_class == label) correct_set.push_back(m);
  }
  return correct_set;
}

namespace {

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

FuzzySet cover_center_spread(double xi, Rng& rng, const ExperimentConfig& cfg) {
  if (is_missing(xi)) return CenterSpread{0.5, cfg.covering_max_spread};
  CenterSpread cs;
  cs.center = xi;
  cs.spread = std::max(kMinSpread, rng.uniform(0.0, cfg.covering_max_spread));
  return cs;
}

FuzzySet cover_trapezoid(double xi, Rng& rng, const ExperimentConfig& cfg) {
  const double r0 = cfg.covering_max_spread;
  Trapezoid tz;
  if (is_missing(xi)) {
    tz.b = 0.5 - r0;
    tz.c = 0.5 + r0;
    tz.a = tz.b - r0;
    tz.d = tz.c + r0;
  } else {
    tz.b = xi - std::max(kMinSpread, rng.uniform(0.0, r0));
    tz.c = xi + std::max(kMinSpread, rng.uniform(0.0, r0));
    tz.a = tz.b - std::max(kMinSpread, rng.uniform(0.0, r0));
    tz.d = tz.c + std::max(kMinSpread, rng.uniform(0.0, r0));
  }
  tz.a = clamp(tz.a, kTrapezoidLo, kTrapezoidHi);
  tz.b = clamp(tz.b, kTrapezoidLo, kTrapezoidHi);
  tz.c = clamp(tz.c, kTrapezoidLo, kTrapezoidHi);
  tz.d = clamp(tz.d, kTrapezoidLo, kTrapezoidHi);
  return tz;
}

}  // namespace

std::unique_ptr<Rule> make_covering_rule(const Sample& x, int label, int classes,
                                         std::int64_t t, Rng& rng,
                                         const ExperimentConfig& cfg) {
  auto rule = std::make_unique<Rule>();
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i) {
    if (cfg.representation == Representation::trapezoid) {
      rule->condition.sets.push_back(cover_trapezoid(x[i], rng, cfg));
    } else {
      rule->condition.sets.push_back(cover_center_spread(x[i], rng, cfg));
      std::uint8_t bit = 0;
      if (cfg.representation == Representation::adaptive) {
        bit = (rng.uniform(0.0, 1.0) < 0.5) ? 0 : 1;
      }
      rule->condition.indicator.push_back(bit);
    }
  }
  // Seed the newcomer with one full-strength correct update so it starts
  // accurate; the experience gate keeps it out of inference until earned.
  rule->predicted_class = label;
  rule->experience = 1.0;
  rule->correct_matchings.assign(classes, 0.0);
  rule->correct_matchings[label] = 1.0;
  rule->class_weights.assign(classes, 0.0);
  rule->class_weights[label] = 1.0;
  rule->fitness = 1.0;
  rule->weight = 1.0;
  rule->numerosity = 1;
  rule->ga_timestamp = t;
  return rule;
}

void update_rules(RuleSet& match_set, int label) {
  for (SetMember& m : match_set) {
    Rule& r = *m.rule;
    r.experience += m.mu;
    r.correct_matchings[label] += m.mu;
    const int classes = static_cast<int>(r.class_weights.size());
    int best = 0;
    double best_v = -1.0;
    double sum_v = 0.0;
    for (int j = 0; j < classes; ++j) {
      const double v = r.correct_matchings[j] / r.experience;
      r.class_weights[j] = v;
      sum_v += v;
      if (v > best_v) {
        best_v = v;
        best = j;
      }
    }
    r.fitness = best_v - (sum_v - best_v);
    r.predicted_class = best;
    r.weight = best_v;
  }
}

Trainer::Trainer(int dims, int classes, const ExperimentConfig& cfg, RngStreams* streams)
    : cfg_(cfg), pop_(dims, classes, cfg.representation), streams_(streams) {
  cfg_.validate();
}

void Trainer::train_step(const Sample& x, int label) {
  ++t_;
  RuleSet match_set = build_match_set(pop_, x);
  RuleSet correct_set = build_correct_set(match_set, label);

  double mu_sum = 0.0;
  for (const SetMember& m : correct_set) mu_sum += m.mu;
  if (mu_sum < 1.0) {
    Rule& covered = pop_.insert(
        make_covering_rule(x, label, pop_.class_count(), t_, streams_->covering, cfg_));
    bool already_in_correct = false;
    for (const SetMember& m : correct_set) {
      if (m.rule == &covered) {
        already_in_correct = true;
        break;
      }
    }
    if (!already_in_correct) correct_set.push_back({&covered, 1.0});
  }

  update_rules(match_set, label);
  if (cfg_.do_correct_set_subsumption) {
    correct_set_subsumption(pop_, match_set, correct_set, cfg_);
  }
  run_ga(pop_, match_set, correct_set, t_, streams_->ga, streams_->deletion, cfg_);
  delete_to_capacity(pop_, match_set, correct_set, streams_->deletion, cfg_);
}

}  // namespace lfcs
