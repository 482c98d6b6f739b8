#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stablegenus/rational.hpp"

namespace stablegenus {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; the leading coefficient is never zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial from_integers(const std::vector<long>& coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  Polynomial primitive() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial squarefree_part(const Polynomial& p);
/// True iff d divides p exactly.
bool divides(const Polynomial& d, const Polynomial& p);

/// Closed or degenerate interval isolating one real root of a squarefree polynomial.
/// Either lo == hi (the root is exactly lo) or lo < hi, p(lo), p(hi) nonzero and of
/// opposite sign, and the open interval contains exactly one root.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

/// Sturm sequence p, p', -rem(p, p'), ... of a squarefree polynomial.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);
/// Number of distinct roots of p in the open interval (a, b); a and b must not be roots.
int count_roots(const std::vector<Polynomial>& sturm, const Rational& a, const Rational& b);

/// Isolates all roots of squarefree p inside the open interval (lo, hi), sorted ascending.
/// lo and hi must not be roots.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

/// One bisection step; keeps the root of p inside the returned interval.
RootInterval bisect(const Polynomial& p, const RootInterval& r);
/// Bisects until width <= max_width (or the root is hit exactly).
RootInterval refine_to(const Polynomial& p, RootInterval r, const Rational& max_width);

/// n-th cyclotomic polynomial Phi_n(t) (integer coefficients).
const Polynomial& cyclotomic(int n);
/// Euler totient.
int totient(int n);

/// Rewrites a palindromic Laurent polynomial sum_{k=-m}^{m} c_k t^k (c_k = c_{-k}),
/// given by its coefficients c_{-m}..c_m, as a polynomial in z = t + 1/t.
Polynomial palindromic_to_z(const std::vector<Rational>& symmetric_coeffs);

/// Minimal polynomial of 2cos(2 pi / n) over Q, n >= 3 (degree totient(n)/2);
/// for n = 1, 2 returns z - 2 and z + 2.
const Polynomial& real_cyclotomic(int n);

}  // namespace stablegenus
