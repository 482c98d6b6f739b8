#pragma once

#include "stablegenus/matrix.hpp"
#include "stablegenus/rational.hpp"

namespace stablegenus {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;     // optimal objective when status == optimal
  RationalVector x;   // optimal vertex when status == optimal
};

/// minimize c.x subject to A x = b, x >= 0. Exact two-phase simplex with Bland's rule.
LpResult solve_lp(const Matrix& a, const RationalVector& b, const RationalVector& c);

}  // namespace stablegenus
