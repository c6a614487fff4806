#include "lfcs/inference.hpp"

namespace lfcs {

std::vector<double> class_votes(Population& pop, const Sample& x,
                                const ExperimentConfig& cfg) {
  std::vector<double> votes(pop.class_count(), 0.0);
  for (const auto& rule : pop.rules()) {
    if (rule->experience <= cfg.exploit_experience_threshold) continue;
    const double mu = matching_degree(rule->condition, x);
    if (mu == 0.0) continue;
    votes[rule->predicted_class] += rule->fitness * mu * rule->numerosity;
  }
  return votes;
}

int predict(Population& pop, const Sample& x, const ExperimentConfig& cfg,
            int fallback_class) {
  const std::vector<double> votes = class_votes(pop, x, cfg);
  bool any_nonzero = false;
  for (double v : votes) {
    if (v != 0.0) {
      any_nonzero = true;
      break;
    }
  }
  if (!any_nonzero) return fallback_class;
  int best = 0;
  for (int j = 1; j < static_cast<int>(votes.size()); ++j) {
    if (votes[j] > votes[best]) best = j;
  }
  return best;
}

}  // namespace lfcs
