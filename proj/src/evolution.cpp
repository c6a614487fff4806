#include "lfcs/evolution.hpp"

#include <algorithm>
#include <cmath>

#include "lfcs/subsumption.hpp"

namespace lfcs {
namespace {

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

void erase_member(RuleSet& set, const Rule* rule) {
  set.erase(std::remove_if(set.begin(), set.end(),
                           [rule](const SetMember& m) { return m.rule == rule; }),
            set.end());
}

// Children are replicas of their parents: the weight vector (averaged across
// both parents when crossover mixed their genes) carries over so selection and
// the accuracy-gated mutation see the lineage's earned fitness, while the
// matching counters restart and the first real update overwrites v from them.
void inherit_child_stats(Rule& child1, Rule& child2, bool crossed) {
  const int classes = static_cast<int>(child1.class_weights.size());
  if (crossed) {
    for (int j = 0; j < classes; ++j) {
      const double mean = 0.5 * (child1.class_weights[j] + child2.class_weights[j]);
      child1.class_weights[j] = mean;
      child2.class_weights[j] = mean;
    }
  }
  for (Rule* child : {&child1, &child2}) {
    child->numerosity = 1;
    child->experience = 0.0;
    child->correct_matchings.assign(classes, 0.0);
    child->crossed = crossed;
    if (!crossed) continue;  // replica keeps its parent's v, F, weight, class
    const auto& v = child->class_weights;
    const auto arg = std::max_element(v.begin(), v.end()) - v.begin();
    double others = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (static_cast<std::ptrdiff_t>(j) != arg) others += v[j];
    }
    child->fitness = v[static_cast<std::size_t>(arg)] - others;
    child->weight = v[static_cast<std::size_t>(arg)];
    child->predicted_class = static_cast<int>(arg);
  }
}

double powered_fitness(const Rule& r, double exponent) {
  return std::pow(std::max(r.fitness, 0.01), exponent);
}

void sort_vertices(Trapezoid& tz) {
  double v[4] = {tz.a, tz.b, tz.c, tz.d};
  std::sort(v, v + 4);
  tz.a = v[0];
  tz.b = v[1];
  tz.c = v[2];
  tz.d = v[3];
}

}  // namespace

bool should_run_ga(const RuleSet& correct_set, std::int64_t t, const ExperimentConfig& cfg) {
  if (correct_set.empty()) return false;
  double weighted_ts = 0.0;
  double total_num = 0.0;
  for (const SetMember& m : correct_set) {
    weighted_ts += static_cast<double>(m.rule->ga_timestamp) * m.rule->numerosity;
    total_num += m.rule->numerosity;
  }
  return static_cast<double>(t) - weighted_ts / total_num > cfg.ga_threshold;
}

Rule* tournament_select(const RuleSet& correct_set, Rng& rng, const ExperimentConfig& cfg) {
  std::int64_t pool_num = 0;
  for (const SetMember& m : correct_set) {
    if (m.rule->fitness >= 0.0) pool_num += m.rule->numerosity;
  }
  if (pool_num == 0) {
    return correct_set[static_cast<std::size_t>(
                           rng.uniform_int(0, static_cast<std::int64_t>(correct_set.size()) - 1))]
        .rule;
  }
  const std::int64_t draws = static_cast<std::int64_t>(
      std::ceil(cfg.tournament_size_ratio * static_cast<double>(pool_num)));
  Rule* best = nullptr;
  double best_score = -1.0;
  for (std::int64_t d = 0; d < draws; ++d) {
    std::int64_t pick = rng.uniform_int(0, pool_num - 1);
    for (const SetMember& m : correct_set) {
      if (m.rule->fitness < 0.0) continue;
      pick -= m.rule->numerosity;
      if (pick < 0) {
        const double score = std::pow(m.rule->fitness, cfg.fitness_exponent) * m.mu;
        if (score > best_score) {
          best_score = score;
          best = m.rule;
        }
        break;
      }
    }
  }
  return best;
}

void crossover(Rule& child1, Rule& child2, Rng& rng, const ExperimentConfig& cfg) {
  bool any_swap = false;
  if (rng.uniform(0.0, 1.0) < cfg.crossover_probability) {
    const int n = child1.condition.dims();
    for (int i = 0; i < n; ++i) {
      FuzzySet& s1 = child1.condition.sets[i];
      FuzzySet& s2 = child2.condition.sets[i];
      if (auto* cs1 = std::get_if<CenterSpread>(&s1)) {
        auto* cs2 = std::get_if<CenterSpread>(&s2);
        if (rng.uniform(0.0, 1.0) < 0.5) {
          std::swap(cs1->center, cs2->center);
          any_swap = true;
        }
        if (rng.uniform(0.0, 1.0) < 0.5) {
          std::swap(cs1->spread, cs2->spread);
          any_swap = true;
        }
        if (rng.uniform(0.0, 1.0) < 0.5) {
          std::swap(child1.condition.indicator[i], child2.condition.indicator[i]);
          any_swap = true;
        }
      } else {
        auto& t1 = std::get<Trapezoid>(s1);
        auto& t2 = std::get<Trapezoid>(s2);
        double* genes1[4] = {&t1.a, &t1.b, &t1.c, &t1.d};
        double* genes2[4] = {&t2.a, &t2.b, &t2.c, &t2.d};
        for (int g = 0; g < 4; ++g) {
          if (rng.uniform(0.0, 1.0) < 0.5) {
            std::swap(*genes1[g], *genes2[g]);
            any_swap = true;
          }
        }
        sort_vertices(t1);
        sort_vertices(t2);
      }
    }
  }
  inherit_child_stats(child1, child2, any_swap);
}

void mutate(Rule& child, Representation rep, Rng& rng, const ExperimentConfig& cfg) {
  const int n = child.condition.dims();
  const double m0 = cfg.mutation_magnitude;
  for (int i = 0; i < n; ++i) {
    if (auto* cs = std::get_if<CenterSpread>(&child.condition.sets[i])) {
      if (rng.uniform(0.0, 1.0) < cfg.mutation_probability) {
        cs->center = clamp(cs->center + rng.uniform(-m0, m0), 0.0, 1.0);
      }
      if (rng.uniform(0.0, 1.0) < cfg.mutation_probability) {
        const bool widen_only = child.fitness > cfg.fitness_threshold && !child.crossed;
        cs->spread += widen_only ? rng.uniform(0.0, m0) : rng.uniform(-m0, m0);
        cs->spread = clamp(cs->spread, kMinSpread, 1.0);
      }
      if (rep == Representation::adaptive &&
          rng.uniform(0.0, 1.0) < cfg.mutation_probability) {
        child.condition.indicator[i] ^= 1;
      }
    } else {
      auto& tz = std::get<Trapezoid>(child.condition.sets[i]);
      double* genes[4] = {&tz.a, &tz.b, &tz.c, &tz.d};
      for (int g = 0; g < 4; ++g) {
        if (rng.uniform(0.0, 1.0) < cfg.mutation_probability) {
          *genes[g] = clamp(*genes[g] + rng.uniform(-m0, m0), kTrapezoidLo, kTrapezoidHi);
        }
      }
      sort_vertices(tz);
    }
  }
}

void delete_to_capacity(Population& pop, RuleSet& match_set, RuleSet& correct_set,
                        Rng& rng, const ExperimentConfig& cfg) {
  while (pop.micro_count() > cfg.max_population_size) {
    double total_num = 0.0;
    double weighted_powered = 0.0;
    for (const auto& r : pop.rules()) {
      total_num += r->numerosity;
      weighted_powered += r->numerosity * powered_fitness(*r, cfg.fitness_exponent);
    }
    const double mean_powered = weighted_powered / total_num;

    double total_vote = 0.0;
    std::vector<double> votes;
    votes.reserve(pop.rules().size());
    for (const auto& r : pop.rules()) {
      const double powered = powered_fitness(*r, cfg.fitness_exponent);
      double penalty = 1.0;
      if (r->experience > cfg.deletion_experience_threshold &&
          powered < cfg.deletion_fitness_fraction * mean_powered) {
        penalty = mean_powered / powered;
      }
      const double vote = r->numerosity * penalty;
      votes.push_back(vote);
      total_vote += vote;
    }

    const double pick = rng.uniform(0.0, total_vote);
    Rule* victim = pop.rules().back().get();
    double cum = 0.0;
    for (std::size_t i = 0; i < votes.size(); ++i) {
      cum += votes[i];
      if (pick < cum) {
        victim = pop.rules()[i].get();
        break;
      }
    }

    victim->numerosity -= 1;
    if (victim->numerosity == 0) {
      erase_member(match_set, victim);
      erase_member(correct_set, victim);
      pop.remove(victim);
    }
  }
}

void run_ga(Population& pop, RuleSet& match_set, RuleSet& correct_set,
            std::int64_t t, Rng& ga_rng, Rng& deletion_rng, const ExperimentConfig& cfg) {
  if (!should_run_ga(correct_set, t, cfg)) return;
  for (SetMember& m : correct_set) m.rule->ga_timestamp = t;

  Rule* parent1 = tournament_select(correct_set, ga_rng, cfg);
  Rule* parent2 = tournament_select(correct_set, ga_rng, cfg);

  auto child1 = std::make_unique<Rule>(*parent1);
  auto child2 = std::make_unique<Rule>(*parent2);
  child1->ga_timestamp = t;
  child2->ga_timestamp = t;
  crossover(*child1, *child2, ga_rng, cfg);
  mutate(*child1, cfg.representation, ga_rng, cfg);
  mutate(*child2, cfg.representation, ga_rng, cfg);

  for (auto* child : {&child1, &child2}) {
    bool absorbed = false;
    if (cfg.do_ga_subsumption) {
      for (Rule* parent : {parent1, parent2}) {
        if (does_subsume(*parent, **child, cfg)) {
          parent->numerosity += 1;
          absorbed = true;
          break;
        }
      }
    }
    if (!absorbed) pop.insert(std::move(*child));
  }

  delete_to_capacity(pop, match_set, correct_set, deletion_rng, cfg);
}

}  // namespace lfcs
