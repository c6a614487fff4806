#include "lfcs/matching.hpp"

#include <algorithm>
#include <cmath>

namespace lfcs {

bool is_missing(double v) { return std::isnan(v); }

double membership(const FuzzySet& set, bool fuzzy, double x) {
  if (is_missing(x)) return 1.0;
  if (const auto* cs = std::get_if<CenterSpread>(&set)) {
    const double lo = cs->center - cs->spread;
    const double hi = cs->center + cs->spread;
    if (x < lo || x >= hi) return 0.0;
    if (!fuzzy) return 1.0;
    // The rounded endpoints can push the ramp ratio a few ulps past 1 near
    // the apex; the apex itself must be exactly 1.
    if (x == cs->center) return 1.0;
    if (x < cs->center) return std::min(1.0, (x - lo) / cs->spread);
    return std::min(1.0, (hi - x) / cs->spread);
  }
  const auto& tz = std::get<Trapezoid>(set);
  if (x < tz.a || x >= tz.d) return 0.0;
  if (x < tz.b) return (x - tz.a) / (tz.b - tz.a);
  if (x < tz.c) return 1.0;
  return (tz.d - x) / (tz.d - tz.c);
}

double matching_degree(const Condition& cond, const Sample& x) {
  double mu = 1.0;
  const std::size_t n = cond.sets.size();
  for (std::size_t i = 0; i < n; ++i) {
    mu *= membership(cond.sets[i], cond.fuzzy_bit(i), x[i]);
    if (mu == 0.0) return 0.0;
  }
  return mu;
}

}  // namespace lfcs
