#pragma once

#include <vector>

#include "lfcs/rule.hpp"

namespace lfcs {

// A sample: attribute values in [0,1], NaN marks a missing value.
using Sample = std::vector<double>;

bool is_missing(double v);

// Membership of x in one dimension of a condition. Missing values match
// fully. Center-spread sets are rectangular ([c-s, c+s), degree 1) when the
// indicator bit is 0 and symmetric triangles when it is 1; trapezoids use
// the usual four-vertex shape. All supports are half-open on the right.
double membership(const FuzzySet& set, bool fuzzy, double x);

// Product of per-dimension memberships; early-exits at zero.
double matching_degree(const Condition& cond, const Sample& x);

}  // namespace lfcs
