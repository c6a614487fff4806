#pragma once

#include "lfcs/config.hpp"
#include "lfcs/population.hpp"
#include "lfcs/rule.hpp"

namespace lfcs {

// Area under a single-dimension membership function: 2s for a rectangle,
// s for a triangle, ((d-a)+(c-b))/2 for a trapezoid.
double membership_area(const FuzzySet& set, bool fuzzy);

// Exact area under min(mu_a, mu_b) for one dimension, by integrating the
// piecewise-linear lower envelope.
double overlap_area(const FuzzySet& a, bool fuzzy_a, const FuzzySet& b, bool fuzzy_b);

// Whether `general` covers `specific` dimension-wise: for two rectangles the
// overlap must equal the specific set's area (containment); any fuzzy pairing
// instead requires overlap >= theta_overlap * specific area.
bool is_more_general(const Condition& general, const Condition& specific,
                     double overlap_ratio_threshold);

bool can_subsume(const Rule& rule, const ExperimentConfig& cfg);

// Merges `victim` into `tos` per-dimension where both sides are triangular
// (or both trapezoid), widening tos to the envelope. Only applies when both
// rules are accurate and experienced. Returns true if any dimension changed.
bool try_merge(Rule& tos, const Rule& victim, const ExperimentConfig& cfg);

// GA subsumption check: parent absorbs child outright.
bool does_subsume(const Rule& candidate, const Rule& child, const ExperimentConfig& cfg);

// Correct-set subsumption: picks the most general sufficiently-fit rule in
// [C] and folds the rules it covers into it (merging first when enabled).
// Removed rules are erased from both sets and the population.
void correct_set_subsumption(Population& pop, RuleSet& match_set, RuleSet& correct_set,
                             const ExperimentConfig& cfg);

}  // namespace lfcs
