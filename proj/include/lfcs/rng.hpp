#pragma once

#include <cstdint>
#include <random>

namespace lfcs {

// Thin wrapper over mt19937_64 so the rest of the code speaks in the three
// draws it actually needs.
class Rng {
 public:
  Rng() : engine_(0) {}
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  double normal(double mean, double stddev) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }

  bool coin() { return uniform_int(0, 1) == 1; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 step, used to derive independent sub-stream seeds from one
// master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Named sub-streams drawn deterministically from a master seed. Keeping the
// environment's sample stream separate from the noise stream means a noisy
// problem presents the same test points as its clean counterpart under the
// same seed.
struct RngStreams {
  Rng env;       // environment sample draws
  Rng noise;     // training noise only
  Rng covering;  // covering spreads / indicator coins
  Rng ga;        // selection, crossover, mutation
  Rng deletion;  // deletion roulette
  Rng cv;        // fold shuffling

  static RngStreams from_master(std::uint64_t master) {
    std::uint64_t s = master;
    RngStreams r;
    r.env = Rng(splitmix64(s));
    r.noise = Rng(splitmix64(s));
    r.covering = Rng(splitmix64(s));
    r.ga = Rng(splitmix64(s));
    r.deletion = Rng(splitmix64(s));
    r.cv = Rng(splitmix64(s));
    return r;
  }
};

}  // namespace lfcs
