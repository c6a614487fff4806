#pragma once

#include <cstdint>

#include "lfcs/config.hpp"
#include "lfcs/matching.hpp"
#include "lfcs/population.hpp"
#include "lfcs/rng.hpp"
#include "lfcs/rule.hpp"

namespace lfcs {

// Rules with nonzero matching degree against x.
RuleSet build_match_set(Population& pop, const Sample& x);

// Members of the match set predicting the supplied class.
RuleSet build_correct_set(const RuleSet& match_set, int label);

// Creates a covering rule centered on x with random spreads, representation
// chosen per config, seeded with one full-strength correct update.
std::unique_ptr<Rule> make_covering_rule(const Sample& x, int label, int classes,
                                         std::int64_t t, Rng& rng,
                                         const ExperimentConfig& cfg);

// Applies the supervised update to every match-set member: experience and
// the true class's tally grow by mu, class weights renormalize, fitness is
// the top weight minus the rest.
void update_rules(RuleSet& match_set, int label);

// The trainer owns the population, streams, and step counter, and exposes
// the paper's single-step protocol.
class Trainer {
 public:
  Trainer(int dims, int classes, const ExperimentConfig& cfg, RngStreams* streams);

  // One supervised step: match, correct set, covering if the correct set's
  // total matching degree falls short of 1, rule updates, correct-set
  // subsumption, GA, deletion.
  void train_step(const Sample& x, int label);

  Population& population() { return pop_; }
  const Population& population() const { return pop_; }
  std::int64_t step_count() const { return t_; }

 private:
  ExperimentConfig cfg_;
  Population pop_;
  RngStreams* streams_;
  std::int64_t t_ = 0;
};

}  // namespace lfcs
