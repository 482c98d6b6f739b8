#include "stablegenus/knot_algebra.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "embedded_data.hpp"

namespace stablegenus {

SeifertMatrix::SeifertMatrix(std::vector<std::vector<Integer>> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0 || n % 2 != 0) throw InputError("Seifert matrix must have positive even size");
  for (const auto& row : entries_) {
    if (row.size() != n) throw InputError("Seifert matrix must be square");
  }
  const Matrix v = to_rational();
  const Rational d = determinant(v - v.transpose());
  if (abs(d) != 1) throw InputError("Seifert matrix invalid: |det(V - V^T)| = " + to_string(abs(d)) + ", expected 1");
}

Matrix SeifertMatrix::to_rational() const {
  Matrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) m(i, j) = Rational(entries_[i][j]);
  return m;
}

SeifertMatrix SeifertMatrix::mirror() const {
  std::vector<std::vector<Integer>> m(size(), std::vector<Integer>(size()));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) m[i][j] = -entries_[j][i];
  return SeifertMatrix(std::move(m));
}

std::string LaurentPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const Integer& c = coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const int e = low + k;
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) out << mag.get_str();
    if (e != 0) {
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return first ? "0" : out.str();
}

std::string BasisKnot::name() const {
  if (is_torus()) {
    const auto& t = torus();
    return std::string(t.mirrored ? "-" : "") + "T(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
  }
  return catalog_entry().name;
}

SeifertMatrix BasisKnot::seifert() const {
  if (is_torus()) {
    const auto& t = torus();
    SeifertMatrix v = seifert_matrix_torus(t.p, t.q);
    return t.mirrored ? v.mirror() : v;
  }
  return catalog_entry().seifert;
}

BasisKnot torus(int p, int q) {
  if (p < 2 || q < 2) {
    throw InputError("torus knot T(" + std::to_string(p) + "," + std::to_string(q) + "): parameters must be >= 2");
  }
  if (std::gcd(p, q) != 1) {
    throw InputError("torus knot T(" + std::to_string(p) + "," + std::to_string(q) + "): parameters not coprime");
  }
  return BasisKnot(TorusKnot{std::min(p, q), std::max(p, q), false});
}

namespace {

std::vector<std::vector<Integer>> bidiagonal(int n) {
  const std::size_t m = static_cast<std::size_t>(n - 1);
  std::vector<std::vector<Integer>> l(m, std::vector<Integer>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    l[i][i] = 1;
    if (i + 1 < m) l[i][i + 1] = -1;
  }
  return l;
}

LaurentPolynomial normalize(const Polynomial& p) {
  if (p.is_zero()) throw std::logic_error("Alexander polynomial vanished");
  int lo = 0;
  while (p.coeff(lo) == 0) ++lo;
  LaurentPolynomial out;
  const int span = p.degree() - lo;
  out.low = -(span / 2);
  const bool flip = p.coeff(lo) < 0;
  for (int k = lo; k <= p.degree(); ++k) {
    const Rational c = p.coeff(k);
    if (!is_integer(c)) throw std::logic_error("Alexander polynomial has non-integer coefficient");
    out.coeffs.push_back(flip ? Integer(-c.get_num()) : c.get_num());
  }
  return out;
}

// Newton interpolation through (xs[i], ys[i]).
Polynomial interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
  Polynomial p = Polynomial::constant(ys[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) p = p * Polynomial({-xs[i], Rational(1)}) + Polynomial::constant(ys[i]);
  return p;
}

}  // namespace

SeifertMatrix seifert_matrix_torus(int p, int q) {
  const BasisKnot k = torus(p, q);
  const auto a = bidiagonal(k.torus().p);
  const auto b = bidiagonal(k.torus().q);
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  std::vector<std::vector<Integer>> v(na * nb, std::vector<Integer>(na * nb, 0));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k2 = 0; k2 < nb; ++k2)
        for (std::size_t l = 0; l < nb; ++l) v[i * nb + k2][j * nb + l] = -(a[i][j] * b[k2][l]);
  return SeifertMatrix(std::move(v));
}

LaurentPolynomial alexander_poly(const SeifertMatrix& v) {
  const Matrix m = v.to_rational();
  const Matrix mt = m.transpose();
  const std::size_t n = v.size();
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational t(static_cast<long>(i));
    xs.push_back(t);
    ys.push_back(determinant(m - t * mt));
  }
  return normalize(interpolate(xs, ys));
}

LaurentPolynomial torus_alexander_formula(int p, int q) {
  auto t_pow_minus_one = [](int e) { return Polynomial::monomial(1, e) - Polynomial::constant(1); };
  const Polynomial num = t_pow_minus_one(p * q) * t_pow_minus_one(1);
  const Polynomial den = t_pow_minus_one(p) * t_pow_minus_one(q);
  auto [quot, rem] = divmod(num, den);
  if (!rem.is_zero()) throw std::logic_error("torus Alexander formula: inexact division");
  return normalize(quot);
}

Polynomial alexander_in_z(const LaurentPolynomial& delta) {
  if (delta.low != -delta.high()) throw std::invalid_argument("alexander_in_z: degree span not symmetric");
  std::vector<Rational> c;
  for (const auto& x : delta.coeffs) c.emplace_back(x);
  return palindromic_to_z(c);
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

struct CatalogRecord {
  std::string name;
  int torus_p = 0;
  int torus_q = 0;
  std::vector<std::vector<Integer>> seifert;
  std::vector<Integer> alexander;
  int abs_sigma_half = -1;
};

std::vector<CatalogRecord> parse_catalog(std::string_view text) {
  std::vector<CatalogRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  CatalogRecord cur;
  bool open = false;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("catalog line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "knot") {
      if (open) fail("nested knot record");
      cur = CatalogRecord{};
      if (!(ls >> cur.name)) fail("missing knot name");
      open = true;
    } else if (!open) {
      fail("'" + key + "' outside a knot record");
    } else if (key == "torus") {
      if (!(ls >> cur.torus_p >> cur.torus_q)) fail("torus needs two integers");
    } else if (key == "seifert") {
      std::string rest;
      std::getline(ls, rest);
      std::istringstream rows(rest);
      std::string row_text;
      while (std::getline(rows, row_text, ';')) {
        std::istringstream rs(row_text);
        std::vector<Integer> row;
        std::string tok;
        while (rs >> tok) row.emplace_back(tok);
        if (!row.empty()) cur.seifert.push_back(std::move(row));
      }
    } else if (key == "alexander") {
      std::string tok;
      while (ls >> tok) cur.alexander.emplace_back(tok);
    } else if (key == "abs_sigma_half") {
      if (!(ls >> cur.abs_sigma_half)) fail("abs_sigma_half needs an integer");
    } else if (key == "end") {
      out.push_back(std::move(cur));
      open = false;
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (open) fail("unterminated record");
  return out;
}

struct LoadedCatalog {
  std::map<std::string, BasisKnot, std::less<>> knots;
};

// Each record is checked against its stored Alexander polynomial and |sigma_{1/2}|.
const LoadedCatalog& loaded_catalog() {
  static const LoadedCatalog catalog = [] {
    LoadedCatalog c;
    for (const auto& rec : parse_catalog(detail::embedded_catalog_text())) {
      BasisKnot knot = rec.torus_p != 0 ? torus(rec.torus_p, rec.torus_q)
                                        : BasisKnot(CatalogKnot{rec.name, SeifertMatrix(rec.seifert)});
      const SeifertMatrix v = knot.seifert();
      const LaurentPolynomial delta = alexander_poly(v);
      if (delta.coeffs != rec.alexander) {
        throw std::runtime_error("catalog knot " + rec.name + ": Alexander polynomial " + delta.to_string() +
                                 " does not match the stored coefficients");
      }
      const Matrix m = v.to_rational();
      const int sigma = symmetric_inertia(m + m.transpose()).signature();
      if (std::abs(sigma) != rec.abs_sigma_half) {
        throw std::runtime_error("catalog knot " + rec.name + ": |sigma_{1/2}| = " + std::to_string(std::abs(sigma)) +
                                 ", stored " + std::to_string(rec.abs_sigma_half));
      }
      c.knots.emplace(rec.name, std::move(knot));
    }
    return c;
  }();
  return catalog;
}

}  // namespace

BasisKnot catalog(std::string_view name) {
  const auto& knots = loaded_catalog().knots;
  if (auto it = knots.find(name); it != knots.end()) return it->second;
  throw InputError("unknown catalog knot '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, knot] : loaded_catalog().knots) out.push_back(name);
  return out;
}

// ---------------------------------------------------------------------------
// KnotExpr

std::pair<BasisKnot, int> canonical_basis(const BasisKnot& k) {
  if (k.is_torus() && k.torus().mirrored) {
    TorusKnot t = k.torus();
    t.mirrored = false;
    return {BasisKnot(t), -1};
  }
  return {k, 1};
}

KnotExpr::KnotExpr(const BasisKnot& k, const Rational& c) { add_term(k, c); }

void KnotExpr::add_term(const BasisKnot& k, const Rational& c) {
  auto [key, sign] = canonical_basis(k);
  Rational& slot = terms_[key];
  slot += sign * c;
  slot.canonicalize();
  if (slot == 0) terms_.erase(key);
}

Rational KnotExpr::coefficient(const BasisKnot& k) const {
  auto [key, sign] = canonical_basis(k);
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : Rational(sign * it->second);
}

std::vector<BasisKnot> KnotExpr::basis() const {
  std::vector<BasisKnot> out;
  for (const auto& [k, c] : terms_) out.push_back(k);
  return out;
}

RationalVector KnotExpr::coordinates(const std::vector<BasisKnot>& basis) const {
  RationalVector x;
  std::size_t matched = 0;
  for (const auto& b : basis) {
    const Rational c = coefficient(b);
    if (c != 0) ++matched;
    x.push_back(c);
  }
  if (matched != terms_.size()) throw std::invalid_argument("expression has terms outside the given basis");
  return x;
}

KnotExpr KnotExpr::from_coordinates(const std::vector<BasisKnot>& basis, const RationalVector& x) {
  if (basis.size() != x.size()) throw std::invalid_argument("from_coordinates: dimension mismatch");
  KnotExpr e;
  for (std::size_t i = 0; i < basis.size(); ++i) e.add_term(basis[i], x[i]);
  return e;
}

KnotExpr operator+(const KnotExpr& a, const KnotExpr& b) {
  KnotExpr out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, c);
  return out;
}

KnotExpr operator*(const Rational& c, const KnotExpr& a) {
  KnotExpr out;
  if (c == 0) return out;
  for (const auto& [k, x] : a.terms_) out.add_term(k, c * x);
  return out;
}

KnotExpr operator-(const KnotExpr& a, const KnotExpr& b) { return a + Rational(-1) * b; }

KnotExpr add(const KnotExpr& a, const KnotExpr& b) { return a + b; }
KnotExpr scale(const Rational& c, const KnotExpr& a) { return c * a; }
KnotExpr mirror(const KnotExpr& a) { return Rational(-1) * a; }

}  // namespace stablegenus
