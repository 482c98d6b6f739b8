#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stablegenus/finite_field.hpp"
#include "stablegenus/knot_algebra.hpp"
#include "stablegenus/rational.hpp"

namespace stablegenus {

/// Dimension n - 2g of the subspace on which characters must vanish for a genus-g surface.
Rational gilmer_dim(long n, const Rational& g);
/// Upper bound 6g on |sigma(K, chi)| for those characters.
Rational gilmer_bound(const Rational& g);

/// Splits a D-invariant subspace of F_7^b into its 2- and 4-eigenspaces.
/// Throws FieldError("not invariant") or FieldError("unexpected eigenstructure").
std::pair<FpSubspace, FpSubspace> split_invariant(const FpSubspace& h, const DeckAction& d);

/// Sum of the rref basis rows: support >= dim H. Throws FieldError when dim H = 0.
FpVector max_support_vector(const FpSubspace& h);

/// The satellite K(J1, J2) and the K(J, -nJ) variant parameter.
struct CGFamily {
  KnotExpr j1;
  KnotExpr j2;
  long n_parameter = 1;
};

/// Character chi_{a,b} on the two eigen-axes, a, b in 0..6.
struct Character {
  int a = 0;
  int b = 0;
};

/// sigma'_{a/7} + sigma'_{2a/7} + sigma'_{4a/7} of the matching companion. Throws InputError
/// for mixed characters (a, b both nonzero) and indices outside 0..6.
Rational cg_sigma(const CGFamily& family, const Character& chi);

/// 6(1 - eps)/eps. Throws InputError unless 0 < eps < 1.
Rational cg_threshold(const Rational& eps);

struct SearchSpace {
  int max_k = 15;
  int max_multiplicity = 5;
};

class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(const std::string& message, std::optional<KnotExpr> best)
      : std::runtime_error(message), best_(std::move(best)) {}
  const std::optional<KnotExpr>& best() const { return best_; }

 private:
  std::optional<KnotExpr> best_;
};

/// First combination of mirrored T(2,k), k odd, whose sigma' at 1/7, 2/7, 3/7 all reach
/// cg_threshold(eps). Multiples m * -T(2,k) are tried first (k ascending, then m ascending),
/// then sums of two distinct k by total multiplicity. Throws SearchExhausted.
KnotExpr construct_J(const Rational& eps, const SearchSpace& space = {});

struct CGCertificate {
  Rational eps;
  KnotExpr j;
  std::vector<Rational> sevenths;  // sigma' at 1/7, 2/7, 3/7
  Rational threshold;
  bool valid = false;
  std::optional<std::string> failure;  // first failing inequality
  std::vector<std::string> transcript;
  Rational lower;  // (1 - eps)/2 when valid, else 0
  Rational upper;  // 1/2: twice K(J, -J) bounds a genus-one surface
};

CGCertificate certify(const Rational& eps, const KnotExpr& j);
/// Recomputes every recorded number of a certificate; true iff all agree.
bool verify_certificate(const CGCertificate& cert);

/// [(n-1)/n, n/(n+1)] for K(J, -nJ). Throws InputError for n < 1.
std::pair<Rational, Rational> variant_bounds(long n);

}  // namespace stablegenus
