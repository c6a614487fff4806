#include "lfcs/subsumption.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lfcs/matching.hpp"

namespace lfcs {
namespace {

constexpr double kAreaEps = 1e-12;

void collect_breakpoints(const FuzzySet& set, bool fuzzy, std::vector<double>& pts) {
  if (const auto* cs = std::get_if<CenterSpread>(&set)) {
    pts.push_back(cs->center - cs->spread);
    if (fuzzy) pts.push_back(cs->center);
    pts.push_back(cs->center + cs->spread);
  } else {
    const auto& tz = std::get<Trapezoid>(set);
    pts.push_back(tz.a);
    pts.push_back(tz.b);
    pts.push_back(tz.c);
    pts.push_back(tz.d);
  }
}

struct EndpointValues {
  double at_left;
  double at_right;
};

// Endpoint limits of a membership function's linear piece on the open
// segment (p, q), reconstructed from two interior evaluations so half-open
// boundary conventions cannot bleed in.
EndpointValues segment_limits(const FuzzySet& set, bool fuzzy, double p, double q) {
  const double w = q - p;
  const double f1 = membership(set, fuzzy, p + w / 3.0);
  const double f2 = membership(set, fuzzy, p + 2.0 * w / 3.0);
  return {2.0 * f1 - f2, 2.0 * f2 - f1};
}

double segment_min_area(double w, double aP, double aQ, double bP, double bQ) {
  const double dP = aP - bP;
  const double dQ = aQ - bQ;
  if (dP * dQ < 0.0) {
    const double xc = w * dP / (dP - dQ);
    const double vc = aP + (aQ - aP) * (xc / w);
    return 0.5 * xc * (std::min(aP, bP) + vc) + 0.5 * (w - xc) * (vc + std::min(aQ, bQ));
  }
  return 0.5 * w * (std::min(aP, bP) + std::min(aQ, bQ));
}

double spread_extent(const FuzzySet& set) {
  if (const auto* cs = std::get_if<CenterSpread>(&set)) return cs->spread;
  const auto& tz = std::get<Trapezoid>(set);
  return (tz.d - tz.a) / 2.0;
}

bool accurate_and_experienced(const Rule& r, const ExperimentConfig& cfg) {
  return r.fitness > cfg.fitness_threshold &&
         r.experience > cfg.subsumption_experience_threshold;
}

}  // namespace

double membership_area(const FuzzySet& set, bool fuzzy) {
  if (const auto* cs = std::get_if<CenterSpread>(&set)) {
    return fuzzy ? cs->spread : 2.0 * cs->spread;
  }
  const auto& tz = std::get<Trapezoid>(set);
  return ((tz.d - tz.a) + (tz.c - tz.b)) / 2.0;
}

double overlap_area(const FuzzySet& a, bool fuzzy_a, const FuzzySet& b, bool fuzzy_b) {
  std::vector<double> pts;
  pts.reserve(8);
  collect_breakpoints(a, fuzzy_a, pts);
  collect_breakpoints(b, fuzzy_b, pts);
  std::sort(pts.begin(), pts.end());
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double p = pts[i];
    const double q = pts[i + 1];
    if (q <= p) continue;
    const EndpointValues fa = segment_limits(a, fuzzy_a, p, q);
    const EndpointValues fb = segment_limits(b, fuzzy_b, p, q);
    area += segment_min_area(q - p, fa.at_left, fa.at_right, fb.at_left, fb.at_right);
  }
  return area;
}

bool is_more_general(const Condition& general, const Condition& specific,
                     double overlap_ratio_threshold) {
  const int n = general.dims();
  for (int i = 0; i < n; ++i) {
    const bool fg = general.fuzzy_bit(i);
    const bool fs = specific.fuzzy_bit(i);
    const double s_tos = membership_area(specific.sets[i], fs);
    const double overlap = overlap_area(general.sets[i], fg, specific.sets[i], fs);
    const bool both_rectangular =
        std::holds_alternative<CenterSpread>(general.sets[i]) && !fg && !fs;
    const double required = both_rectangular ? s_tos : s_tos * overlap_ratio_threshold;
    if (overlap < required - kAreaEps) return false;
  }
  return true;
}

bool can_subsume(const Rule& rule, const ExperimentConfig& cfg) {
  return accurate_and_experienced(rule, cfg);
}

bool try_merge(Rule& tos, const Rule& victim, const ExperimentConfig& cfg) {
  if (!cfg.do_merge) return false;
  if (!accurate_and_experienced(victim, cfg)) return false;
  bool merged = false;
  const int n = tos.condition.dims();
  for (int i = 0; i < n; ++i) {
    if (auto* cs = std::get_if<CenterSpread>(&tos.condition.sets[i])) {
      if (!tos.condition.fuzzy_bit(i) || !victim.condition.fuzzy_bit(i)) continue;
      const auto& vs = std::get<CenterSpread>(victim.condition.sets[i]);
      const double lo = std::min(cs->center - cs->spread, vs.center - vs.spread);
      const double hi = std::max(cs->center + cs->spread, vs.center + vs.spread);
      const double new_spread = (hi - lo) / 2.0;
      if (new_spread > 1.0) continue;
      const double new_center = (hi + lo) / 2.0;
      if (bits_equal(new_center, cs->center) && bits_equal(new_spread, cs->spread)) continue;
      cs->center = new_center;
      cs->spread = new_spread;
      merged = true;
    } else {
      auto& tz = std::get<Trapezoid>(tos.condition.sets[i]);
      const auto& vz = std::get<Trapezoid>(victim.condition.sets[i]);
      // Componentwise hull: support widens to the envelope while the kernel
      // keeps covering both rules' plateaus.
      const Trapezoid envelope{std::min(tz.a, vz.a), std::min(tz.b, vz.b),
                               std::max(tz.c, vz.c), std::max(tz.d, vz.d)};
      if (tz == envelope) continue;
      tz = envelope;
      merged = true;
    }
  }
  return merged;
}

bool does_subsume(const Rule& candidate, const Rule& child, const ExperimentConfig& cfg) {
  return candidate.predicted_class == child.predicted_class && can_subsume(candidate, cfg) &&
         is_more_general(candidate.condition, child.condition, cfg.overlap_ratio_threshold);
}

void correct_set_subsumption(Population& pop, RuleSet& match_set, RuleSet& correct_set,
                             const ExperimentConfig& cfg) {
  // "Most general" is measured by how many other members the qualified rule
  // generalizes; ties go to the larger summed spread, then the earlier member.
  Rule* subsumer = nullptr;
  int best_count = 0;
  double best_spread = -1.0;
  for (const SetMember& m : correct_set) {
    if (!can_subsume(*m.rule, cfg)) continue;
    int count = 0;
    for (const SetMember& other : correct_set) {
      if (other.rule == m.rule) continue;
      if (is_more_general(m.rule->condition, other.rule->condition,
                          cfg.overlap_ratio_threshold)) {
        ++count;
      }
    }
    if (count == 0) continue;
    double spread = 0.0;
    const Condition& cond = m.rule->condition;
    for (int i = 0; i < cond.dims(); ++i) spread += spread_extent(cond.sets[i]);
    if (count > best_count || (count == best_count && spread > best_spread)) {
      best_count = count;
      best_spread = spread;
      subsumer = m.rule;
    }
  }
  if (subsumer == nullptr) return;

  // Victims are judged against the subsumer's condition as of set formation;
  // merges widen the survivor but do not extend its reach within this pass.
  const Condition subsumer_entry = subsumer->condition;
  for (std::size_t i = 0; i < correct_set.size();) {
    Rule* victim = correct_set[i].rule;
    if (victim == subsumer ||
        !is_more_general(subsumer_entry, victim->condition, cfg.overlap_ratio_threshold)) {
      ++i;
      continue;
    }
    try_merge(*subsumer, *victim, cfg);
    subsumer->numerosity += victim->numerosity;
    correct_set.erase(correct_set.begin() + i);
    match_set.erase(std::remove_if(match_set.begin(), match_set.end(),
                                   [victim](const SetMember& m) { return m.rule == victim; }),
                    match_set.end());
    pop.remove(victim);
  }
}

}  // namespace lfcs
