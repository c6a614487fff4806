#pragma once

#include "lfcs/config.hpp"
#include "lfcs/matching.hpp"
#include "lfcs/population.hpp"

namespace lfcs {

// Class-wise votes: sum of fitness * mu * numerosity over experienced
// matching rules per predicted class. Negative fitness counts as-is.
std::vector<double> class_votes(Population& pop, const Sample& x,
                                const ExperimentConfig& cfg);

// Fitness-weighted inference. If no rule matches or every vote is exactly
// zero, returns `fallback_class`; otherwise the argmax vote (ties to the
// lowest class index).
int predict(Population& pop, const Sample& x, const ExperimentConfig& cfg,
            int fallback_class);

}  // namespace lfcs
