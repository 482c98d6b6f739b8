#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stablegenus/matrix.hpp"
#include "stablegenus/polynomial.hpp"
#include "stablegenus/rational.hpp"

namespace stablegenus {

/// Square integer matrix of even size with V - V^T unimodular.
class SeifertMatrix {
 public:
  /// Validates shape and |det(V - V^T)| = 1; throws InputError otherwise.
  explicit SeifertMatrix(std::vector<std::vector<Integer>> entries);

  std::size_t size() const { return entries_.size(); }
  std::size_t genus() const { return entries_.size() / 2; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<Integer>>& entries() const { return entries_; }

  Matrix to_rational() const;
  /// Seifert matrix of the mirror image, -V^T.
  SeifertMatrix mirror() const;

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  std::vector<std::vector<Integer>> entries_;
};

/// Integer Laurent polynomial sum_k coeffs[k] t^(low + k).
struct LaurentPolynomial {
  int low = 0;
  std::vector<Integer> coeffs;

  int high() const { return low + static_cast<int>(coeffs.size()) - 1; }
  std::string to_string() const;
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;
};

struct TorusKnot {
  int p = 2;
  int q = 3;
  bool mirrored = false;
  friend auto operator<=>(const TorusKnot&, const TorusKnot&) = default;
};

struct CatalogKnot {
  std::string name;
  SeifertMatrix seifert;
  friend bool operator==(const CatalogKnot& a, const CatalogKnot& b) { return a.name == b.name; }
  friend auto operator<=>(const CatalogKnot& a, const CatalogKnot& b) { return a.name <=> b.name; }
};

/// A knot used as a coordinate direction of the rationalized concordance group.
class BasisKnot {
 public:
  explicit BasisKnot(TorusKnot t) : knot_(t) {}
  explicit BasisKnot(CatalogKnot c) : knot_(std::move(c)) {}

  bool is_torus() const { return std::holds_alternative<TorusKnot>(knot_); }
  const TorusKnot& torus() const { return std::get<TorusKnot>(knot_); }
  const CatalogKnot& catalog_entry() const { return std::get<CatalogKnot>(knot_); }

  /// "T(p,q)", "-T(p,q)" for a mirrored torus knot, or the catalog name.
  std::string name() const;
  SeifertMatrix seifert() const;

  friend bool operator==(const BasisKnot&, const BasisKnot&) = default;
  friend auto operator<=>(const BasisKnot& a, const BasisKnot& b) {
    // Torus knots sort before catalog knots.
    if (a.knot_.index() != b.knot_.index()) return a.knot_.index() <=> b.knot_.index();
    if (a.is_torus()) return a.torus() <=> b.torus();
    return a.catalog_entry() <=> b.catalog_entry();
  }

 private:
  std::variant<TorusKnot, CatalogKnot> knot_;
};

/// Canonical torus knot T(p,q) with p < q. Throws InputError unless p,q >= 2 and gcd(p,q) = 1.
BasisKnot torus(int p, int q);

/// Seifert form of the fiber surface of T(p,q): -(L_p (x) L_q), with L_n the
/// (n-1)x(n-1) bidiagonal matrix (1 on the diagonal, -1 above it).
SeifertMatrix seifert_matrix_torus(int p, int q);

/// Catalog lookup (3_1, 4_1, 5_1, 5_2, 6_2). Throws InputError for unknown names.
BasisKnot catalog(std::string_view name);
std::vector<std::string> catalog_names();

/// det(V - t V^T), shifted to a symmetric degree span with positive lowest coefficient.
LaurentPolynomial alexander_poly(const SeifertMatrix& v);

/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), normalized like alexander_poly.
LaurentPolynomial torus_alexander_formula(int p, int q);

/// Formal finite Q-linear combination of basis knots; zero coefficients are never stored
/// and mirrored torus knots are folded into the coefficient sign.
class KnotExpr {
 public:
  KnotExpr() = default;
  KnotExpr(const BasisKnot& k, const Rational& c = 1);

  const std::map<BasisKnot, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const BasisKnot& k) const;
  std::vector<BasisKnot> basis() const;
  /// Coordinates against an explicit basis; throws std::invalid_argument if a term is missing.
  RationalVector coordinates(const std::vector<BasisKnot>& basis) const;
  static KnotExpr from_coordinates(const std::vector<BasisKnot>& basis, const RationalVector& x);

  friend KnotExpr operator+(const KnotExpr& a, const KnotExpr& b);
  friend KnotExpr operator-(const KnotExpr& a, const KnotExpr& b);
  friend KnotExpr operator*(const Rational& c, const KnotExpr& a);
  friend bool operator==(const KnotExpr&, const KnotExpr&) = default;

 private:
  void add_term(const BasisKnot& k, const Rational& c);
  std::map<BasisKnot, Rational> terms_;
};

KnotExpr add(const KnotExpr& a, const KnotExpr& b);
KnotExpr scale(const Rational& c, const KnotExpr& a);
/// Concordance inverse: every coefficient negated.
KnotExpr mirror(const KnotExpr& a);

/// Canonicalizes a basis knot: mirrored torus knots become unmirrored, sign returned.
std::pair<BasisKnot, int> canonical_basis(const BasisKnot& k);

/// Symmetric Laurent coefficients of the Alexander polynomial rewritten in z = t + 1/t.
Polynomial alexander_in_z(const LaurentPolynomial& delta);

}  // namespace stablegenus
