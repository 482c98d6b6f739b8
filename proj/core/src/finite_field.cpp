#include "stablegenus/finite_field.hpp"

#include <string>

namespace stablegenus {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = mod_p(a, p);
  if (a == 0) throw FieldError("zero has no inverse");
  // Extended Euclid.
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return mod_p(s0, p);
}

FpMatrix rref(FpMatrix rows, std::int64_t p) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  for (auto& r : rows) {
    if (r.size() != cols) throw FieldError("ragged matrix");
    for (auto& x : r) x = mod_p(x, p);
  }
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t piv = lead;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[lead], rows[piv]);
    const std::int64_t inv = inv_mod(rows[lead][c], p);
    for (auto& x : rows[lead]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c] == 0) continue;
      const std::int64_t f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = mod_p(rows[r][k] - f * rows[lead][k], p);
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

std::size_t rank(const FpMatrix& rows, std::int64_t p) { return rref(rows, p).size(); }

FpMatrix kernel(const FpMatrix& m, std::size_t columns, std::int64_t p) {
  const FpMatrix r = rref(m, p);
  std::vector<long> pivot_of_col(columns, -1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t c = 0; c < columns; ++c) {
      if (r[i][c] != 0) {
        pivot_of_col[c] = static_cast<long>(i);
        break;
      }
    }
  }
  FpMatrix out;
  for (std::size_t free = 0; free < columns; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    FpVector v(columns, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < columns; ++c)
      if (pivot_of_col[c] >= 0) v[c] = mod_p(-r[static_cast<std::size_t>(pivot_of_col[c])][free], p);
    out.push_back(std::move(v));
  }
  return rref(out, p);
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, std::int64_t p) {
  if (a.empty()) return {};
  if (a.front().size() != b.size()) throw FieldError("dimension mismatch");
  const std::size_t n = b.empty() ? 0 : b.front().size();
  FpMatrix out(a.size(), FpVector(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % p;
  return out;
}

FpVector apply(const FpMatrix& m, const FpVector& x, std::int64_t p) {
  FpVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != x.size()) throw FieldError("dimension mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) out[i] = (out[i] + m[i][j] * x[j]) % p;
  }
  return out;
}

FpSubspace::FpSubspace(std::int64_t p, std::size_t ambient, const FpMatrix& spanning) : p_(p), b_(ambient) {
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  for (const auto& r : spanning)
    if (r.size() != ambient) throw FieldError("spanning vector has the wrong length");
  basis_ = rref(spanning, p);
}

FpSubspace FpSubspace::whole(std::int64_t p, std::size_t ambient) {
  FpMatrix id(ambient, FpVector(ambient, 0));
  for (std::size_t i = 0; i < ambient; ++i) id[i][i] = 1;
  return FpSubspace(p, ambient, id);
}

bool FpSubspace::contains(const FpVector& v) const {
  if (v.size() != b_) throw FieldError("vector has the wrong length");
  FpMatrix rows = basis_;
  rows.push_back(v);
  return rank(rows, p_) == basis_.size();
}

std::vector<FpVector> FpSubspace::elements() const {
  std::vector<FpVector> out{FpVector(b_, 0)};
  for (const auto& row : basis_) {
    std::vector<FpVector> next;
    for (const auto& v : out) {
      for (std::int64_t c = 0; c < p_; ++c) {
        FpVector w = v;
        for (std::size_t k = 0; k < b_; ++k) w[k] = (w[k] + c * row[k]) % p_;
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

FpSubspace intersect(const FpSubspace& a, const FpSubspace& b) {
  if (a.prime() != b.prime() || a.ambient() != b.ambient()) throw FieldError("subspaces live in different spaces");
  const std::int64_t p = a.prime();
  const std::size_t n = a.ambient();
  // x = sum c_i a_i lies in b iff it is annihilated by every vector of b's complement.
  const FpMatrix ann = kernel(b.basis(), n, p);  // orthogonal complement of b
  const std::size_t da = a.dimension();
  FpMatrix constraints(ann.size(), FpVector(da, 0));
  for (std::size_t r = 0; r < ann.size(); ++r)
    for (std::size_t i = 0; i < da; ++i) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s = (s + ann[r][k] * a.basis()[i][k]) % p;
      constraints[r][i] = s;
    }
  const FpMatrix coeffs = kernel(constraints, da, p);
  FpMatrix vecs;
  for (const auto& c : coeffs) {
    FpVector v(n, 0);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t k = 0; k < n; ++k) v[k] = (v[k] + c[i] * a.basis()[i][k]) % p;
    vecs.push_back(std::move(v));
  }
  return FpSubspace(p, n, vecs);
}

DeckAction::DeckAction(std::int64_t p, FpMatrix d) : p_(p), d_(std::move(d)) {
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  for (auto& r : d_) {
    if (r.size() != d_.size()) throw FieldError("deck action must be square");
    for (auto& x : r) x = mod_p(x, p);
  }
  const FpMatrix cube = multiply(multiply(d_, d_, p), d_, p);
  for (std::size_t i = 0; i < d_.size(); ++i)
    for (std::size_t j = 0; j < d_.size(); ++j)
      if (cube[i][j] != (i == j ? 1 : 0)) throw FieldError("deck action does not satisfy D^3 = I");
}

FpSubspace DeckAction::eigenspace(std::int64_t lambda) const {
  FpMatrix m = d_;
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = mod_p(m[i][i] - lambda, p_);
  return FpSubspace(p_, d_.size(), kernel(m, d_.size(), p_));
}

std::size_t support_size(const FpVector& v) {
  std::size_t n = 0;
  for (auto x : v)
    if (x != 0) ++n;
  return n;
}

}  // namespace stablegenus
