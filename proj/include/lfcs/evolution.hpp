#pragma once

#include <cstdint>

#include "lfcs/config.hpp"
#include "lfcs/population.hpp"
#include "lfcs/rng.hpp"
#include "lfcs/rule.hpp"

namespace lfcs {

// True when the numerosity-weighted mean GA timestamp of the correct set
// lags the clock by more than the GA threshold.
bool should_run_ga(const RuleSet& correct_set, std::int64_t t, const ExperimentConfig& cfg);

// Tournament selection over the correct set: ceil(tau * total numerosity of
// the non-negative-fitness pool) draws with replacement, winner maximizes
// fitness^nu * mu. An empty pool falls back to a uniform pick.
Rule* tournament_select(const RuleSet& correct_set, Rng& rng, const ExperimentConfig& cfg);

// Uniform crossover: with probability chi, swap each scalar gene (and
// indicator bit) between the children with probability 1/2. Children whose
// genes actually swapped are flagged `crossed`.
void crossover(Rule& child1, Rule& child2, Rng& rng, const ExperimentConfig& cfg);

// Per-gene mutation. Centers jitter by +-U[-m0, m0) clamped to [0,1].
// Spreads of accurate, uncrossed children only widen (+U[0, m0)); otherwise
// they jitter both ways; clamped to [0.005, 1]. Indicator bits flip only in
// the adaptive representation. Trapezoid vertices jitter independently then
// re-sort, clamped to the [-0.5, 1.5] working range.
void mutate(Rule& child, Representation rep, Rng& rng, const ExperimentConfig& cfg);

// Roulette deletion of single numerosity units until the micro count fits
// the population bound. Experienced low-fitness rules are penalized in
// proportion to how far below the mean their powered fitness sits.
void delete_to_capacity(Population& pop, RuleSet& match_set, RuleSet& correct_set,
                        Rng& rng, const ExperimentConfig& cfg);

// One GA invocation on the correct set: select two parents, clone, cross,
// mutate, reset child statistics, then insert with GA subsumption.
void run_ga(Population& pop, RuleSet& match_set, RuleSet& correct_set,
            std::int64_t t, Rng& ga_rng, Rng& deletion_rng, const ExperimentConfig& cfg);

}  // namespace lfcs
