#pragma once

#include <bit>
#include <cstdint>
#include <variant>

namespace lfcs {

// One-dimensional fuzzy set described by center and spread. The membership
// shape (rectangular vs triangular) is chosen per rule by its indicator bit,
// not stored here.
struct CenterSpread {
  double center = 0.0;  // in [0, 1]
  double spread = 0.0;  // in [kMinSpread, 1]
};

// One-dimensional fuzzy set described by the four vertices of a trapezoid,
// a <= b <= c <= d. Vertices may leave [0, 1] by half a unit so that the
// plateau can cover the domain edges at full strength.
struct Trapezoid {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

using FuzzySet = std::variant<CenterSpread, Trapezoid>;

// Floor on center-spread spreads; keeps ramp slopes finite.
inline constexpr double kMinSpread = 0.005;

// Working range for trapezoid vertices.
inline constexpr double kTrapezoidLo = -0.5;
inline constexpr double kTrapezoidHi = 1.5;

inline bool bits_equal(double x, double y) {
  return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y);
}

inline bool operator==(const CenterSpread& lhs, const CenterSpread& rhs) {
  return bits_equal(lhs.center, rhs.center) && bits_equal(lhs.spread, rhs.spread);
}

inline bool operator==(const Trapezoid& lhs, const Trapezoid& rhs) {
  return bits_equal(lhs.a, rhs.a) && bits_equal(lhs.b, rhs.b) &&
         bits_equal(lhs.c, rhs.c) && bits_equal(lhs.d, rhs.d);
}

}  // namespace lfcs
