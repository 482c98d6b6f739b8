#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace stablegenus {

/// Vectors and matrices over F_p hold residues in [0, p).
using FpVector = std::vector<std::int64_t>;
using FpMatrix = std::vector<FpVector>;  // row-major

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t mod_p(std::int64_t a, std::int64_t p);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);

/// Reduced row echelon form with zero rows dropped.
FpMatrix rref(FpMatrix rows, std::int64_t p);
std::size_t rank(const FpMatrix& rows, std::int64_t p);
/// Basis (in rref) of {x : M x = 0} for an m x b matrix M.
FpMatrix kernel(const FpMatrix& m, std::size_t columns, std::int64_t p);
FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, std::int64_t p);
FpVector apply(const FpMatrix& m, const FpVector& x, std::int64_t p);

/// Row space of an rref basis inside F_p^b.
class FpSubspace {
 public:
  /// Spanning rows are reduced; throws FieldError for a non-prime p or length mismatch.
  FpSubspace(std::int64_t p, std::size_t ambient, const FpMatrix& spanning);
  static FpSubspace whole(std::int64_t p, std::size_t ambient);

  std::int64_t prime() const { return p_; }
  std::size_t ambient() const { return b_; }
  std::size_t dimension() const { return basis_.size(); }
  const FpMatrix& basis() const { return basis_; }
  bool contains(const FpVector& v) const;
  /// All p^dim elements; intended for small checks.
  std::vector<FpVector> elements() const;

  friend bool operator==(const FpSubspace&, const FpSubspace&) = default;

 private:
  std::int64_t p_;
  std::size_t b_;
  FpMatrix basis_;
};

FpSubspace intersect(const FpSubspace& a, const FpSubspace& b);

/// Order-3 linear map on F_p^b; D^3 = I is checked on construction.
class DeckAction {
 public:
  DeckAction(std::int64_t p, FpMatrix d);
  std::int64_t prime() const { return p_; }
  const FpMatrix& matrix() const { return d_; }
  std::size_t dimension() const { return d_.size(); }
  /// ker(D - lambda I).
  FpSubspace eigenspace(std::int64_t lambda) const;

 private:
  std::int64_t p_;
  FpMatrix d_;
};

std::size_t support_size(const FpVector& v);

}  // namespace stablegenus
