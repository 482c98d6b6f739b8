#pragma once

#include <compare>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "stablegenus/knot_algebra.hpp"
#include "stablegenus/polynomial.hpp"
#include "stablegenus/rational.hpp"

namespace stablegenus {

/// Default cap on working precision for certified comparisons.
inline constexpr unsigned kDefaultPrecisionCapBits = 256;

/// A root z0 of a squarefree, cyclotomic-free integer polynomial in z = 2cos(2 pi t),
/// z0 in (-2, 2). It stands for the unique t0 in (0, 1/2) with 2cos(2 pi t0) = z0.
struct AlgebraicJump {
  Polynomial poly;
  RootInterval z;
};

/// Position of a signature jump in (0, 1/2]: an exact rational, or an isolated
/// irrational point known through its cosine.
class JumpLocation {
 public:
  explicit JumpLocation(Rational t) : loc_(std::move(t)) {}
  explicit JumpLocation(AlgebraicJump root) : loc_(std::move(root)) {}

  bool is_exact() const { return std::holds_alternative<Rational>(loc_); }
  const Rational& exact() const { return std::get<Rational>(loc_); }
  const AlgebraicJump& algebraic() const { return std::get<AlgebraicJump>(loc_); }

  /// Rational t-interval containing the location ([t, t] when exact).
  std::pair<Rational, Rational> t_interval(unsigned bits = 64) const;
  /// A rational inside t_interval(), used for plotting.
  Rational representative() const;
  /// "a/b" or "[a/b, c/d]".
  std::string to_string() const;

 private:
  std::variant<Rational, AlgebraicJump> loc_;
};

/// Orders locations by t. Throws PrecisionError if two distinct locations cannot be
/// separated within cap_bits.
std::strong_ordering compare(const JumpLocation& a, const JumpLocation& b,
                             unsigned cap_bits = kDefaultPrecisionCapBits);
std::strong_ordering compare(const JumpLocation& a, const Rational& t,
                             unsigned cap_bits = kDefaultPrecisionCapBits);

struct Jump {
  JumpLocation location;
  int delta = 0;
};

/// Tristram-Levine signature function t -> sigma_t on (0, 1/2], extended to (0, 1)
/// by sigma_t = sigma_{1-t}. Zero near t = 0; jumps strictly increasing.
class StepFunction {
 public:
  StepFunction() = default;
  /// Validates ordering, even nonzero deltas and locations in (0, 1/2].
  explicit StepFunction(std::vector<Jump> jumps, unsigned cap_bits = kDefaultPrecisionCapBits);

  const std::vector<Jump>& jumps() const { return jumps_; }
  unsigned cap_bits() const { return cap_bits_; }

  /// Two-sided average sigma'_t for any rational t (reduced mod 1, symmetric about 1/2).
  Rational averaged_value(const Rational& t) const;
  /// Value on the open interval just after jump i (i = -1 means before the first jump).
  int value_after(int i) const;
  StepFunction negated() const;

 private:
  std::vector<Jump> jumps_;
  unsigned cap_bits_ = kDefaultPrecisionCapBits;
};

/// Closed-form torus-knot jumps: the points i/p + j/q (mod 1) in (0, 1/2], delta -2
/// when i/p + j/q > 1 and +2 when it is < 1 (positive torus knots are non-positive).
StepFunction torus_jumps(int p, int q);

/// Signature function of a Seifert matrix, from the unit-circle roots of its Alexander
/// polynomial and exact Hermitian signatures sampled between them.
StepFunction stepfun_from_seifert(const SeifertMatrix& v, unsigned cap_bits = kDefaultPrecisionCapBits);

/// Exact signature of (1 - w)V + (1 - conj w)V^T at w = ((1 - s^2) + 2 i s) / (1 + s^2),
/// i.e. at t = arctan(s) / pi, for rational s > 0.
int hermitian_signature_at_tan(const SeifertMatrix& v, const Rational& s);

/// Signature function of a basis knot (closed form for torus knots).
StepFunction step_function(const BasisKnot& k, unsigned cap_bits = kDefaultPrecisionCapBits);

/// sum_i x_i sigma'_t(K_i).
Rational evaluate(const KnotExpr& expr, const Rational& t, unsigned cap_bits = kDefaultPrecisionCapBits);

/// Linear functional on coordinates over a fixed basis.
struct Functional {
  std::string label;
  RationalVector coefficients;
  Rational apply(const RationalVector& x) const { return dot(coefficients, x); }
};

/// One functional of half-signatures per maximal interval of the union jump set in
/// (0, 1/2], ordered by left endpoint, with zero and sign-duplicate vectors removed.
std::vector<Functional> interval_functionals(const std::vector<BasisKnot>& basis,
                                             unsigned cap_bits = kDefaultPrecisionCapBits);

/// tau and s/2 functionals; empty unless every basis knot is a torus knot.
std::vector<Functional> smooth_functionals(const std::vector<BasisKnot>& basis);

/// Removes zero functionals and those equal up to sign to an earlier one.
std::vector<Functional> dedupe_functionals(const std::vector<Functional>& fs);

/// max over t of (1/2)|sigma_t(expr)|.
Rational max_half_abs(const KnotExpr& expr, unsigned cap_bits = kDefaultPrecisionCapBits);

int tau_torus(int p, int q);
int s_torus(int p, int q);

/// (sigma'_{1/7}, sigma'_{2/7}, sigma'_{3/7}); sigma'_{4/7} equals the last by symmetry.
std::tuple<Rational, Rational, Rational> sigma_sevenths(const KnotExpr& j,
                                                        unsigned cap_bits = kDefaultPrecisionCapBits);

/// Piece of the combined signature function of an expression on (0, 1/2].
/// lo == nullopt means 0, hi == nullopt means 1/2.
struct Segment {
  std::optional<JumpLocation> lo;
  std::optional<JumpLocation> hi;
  Rational value;
};

/// Constant pieces of t -> sigma_t(expr) on (0, 1/2], split at every jump of every term.
std::vector<Segment> segments(const KnotExpr& expr, unsigned cap_bits = kDefaultPrecisionCapBits);

}  // namespace stablegenus
