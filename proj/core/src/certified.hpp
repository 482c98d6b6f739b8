#pragma once

#include "stablegenus/rational.hpp"

namespace stablegenus::detail {

/// Closed rational interval [lo, hi] known to contain a real number.
struct Enclosure {
  Rational lo;
  Rational hi;
  bool disjoint_below(const Enclosure& other) const { return hi < other.lo; }
};

/// Encloses 2cos(2 pi t) for t in [0, 1/2] using directed rounding at the given
/// working precision. Exact (lo == hi) when the value is rational.
Enclosure two_cos_two_pi(const Rational& t, unsigned bits);

/// Encloses t = acos(z/2) / (2 pi) in [0, 1/2] for every z in [z_lo, z_hi] within [-2, 2].
Enclosure angle_from_two_cos(const Rational& z_lo, const Rational& z_hi, unsigned bits);

}  // namespace stablegenus::detail
