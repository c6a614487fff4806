#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfcs/matching.hpp"
#include "lfcs/rng.hpp"

namespace lfcs {

// Axis-aligned n x n checkerboard over [0,1)^2, alternating classes 0/1.
int cb_classify(double x1, double x2, int n);

// Checkerboard rotated 45 degrees about (0.5, 0.5).
int rcb_classify(double x1, double x2, int n);

struct LabeledSample {
  Sample x;
  int label = 0;
};

// Stream of 2-D benchmark problems. `noisy` adds Gaussian jitter
// (sigma 0.05, clamped to [0, 1)) to training samples only, drawn from a
// dedicated stream so test points are unchanged versus the clean problem.
class CheckerboardEnv {
 public:
  CheckerboardEnv(int n, bool rotated, bool noisy) : n_(n), rotated_(rotated), noisy_(noisy) {}

  int classes() const { return 2; }
  int dims() const { return 2; }

  LabeledSample next_train(Rng& env, Rng& noise) const;
  LabeledSample next_test(Rng& env) const;

  int classify(double x1, double x2) const;

 private:
  int n_;
  bool rotated_;
  bool noisy_;
};

// A dataset loaded from disk: normalized features in [0,1), integer labels,
// original label names in first-appearance order.
struct Dataset {
  std::vector<LabeledSample> samples;
  std::vector<std::string> class_names;
  std::vector<std::string> feature_names;
  int dims = 0;
  int classes = 0;
};

// Loads a delimited text file (comma or tab, auto-detected), optional header
// row, last column the class label, '?' for missing values. Numeric columns
// are min-max normalized into [0,1); nominal columns become integer codes by
// first appearance, then normalized the same way.
Dataset load_dataset(const std::string& path);

// Stratified fold assignment: per-class shuffle, then round-robin across
// folds. Returns fold index per sample.
std::vector<int> stratified_folds(const Dataset& data, int folds, Rng& rng);

}  // namespace lfcs
