#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lfcs/fuzzy_set.hpp"

namespace lfcs {

// Antecedent of a rule: one fuzzy set per input dimension plus, for
// center-spread representations, one indicator bit per dimension selecting
// rectangular (0) or triangular (1) membership. Trapezoid conditions carry
// no indicator.
struct Condition {
  std::vector<FuzzySet> sets;
  std::vector<std::uint8_t> indicator;

  int dims() const { return static_cast<int>(sets.size()); }
  bool fuzzy_bit(std::size_t i) const { return !indicator.empty() && indicator[i] != 0; }
};

bool operator==(const Condition& lhs, const Condition& rhs);

// A macro rule: condition, predicted class, and the bookkeeping updated by
// the supervised loop. `class_weights[j]` is the fraction of this rule's
// experience earned while the true class was j; fitness is the max weight
// minus the rest.
struct Rule {
  Condition condition;
  int predicted_class = 0;
  double weight = 0.0;                     // copy of max class weight; reporting only
  double fitness = 0.0;                    // in [-1, 1]
  double experience = 0.0;
  int numerosity = 1;
  std::vector<double> correct_matchings;   // per class, sums to experience
  std::vector<double> class_weights;       // per class, sums to 1 once experienced
  std::int64_t ga_timestamp = 0;
  bool crossed = false;                    // whether any gene swap produced this rule
};

// Handle into a match or correct set; mu caches the matching degree against
// the current input.
struct SetMember {
  Rule* rule = nullptr;
  double mu = 0.0;
};

using RuleSet = std::vector<SetMember>;

}  // namespace lfcs
