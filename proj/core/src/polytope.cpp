#include "stablegenus/polytope.hpp"

#include <algorithm>
#include <set>

#include "stablegenus/linear_program.hpp"
#include "stablegenus/matrix.hpp"

namespace stablegenus {

namespace {

void check_dimension(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(got));
  }
}

}  // namespace

Halfspace make_halfspace(const RationalVector& normal, const Rational& bound) {
  if (bound <= 0) throw std::invalid_argument("halfspace bound must be positive");
  Integer den_lcm = 1;
  for (const auto& c : normal) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& c : normal) {
    const Integer n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  if (content == 0) throw std::invalid_argument("halfspace normal must be nonzero");
  Rational scale(den_lcm, content);
  scale.canonicalize();
  const auto first = std::find_if(normal.begin(), normal.end(), [](const Rational& c) { return c != 0; });
  if (*first < 0) scale = -scale;
  Halfspace h;
  for (const auto& c : normal) h.normal.push_back(c * scale);
  h.bound = bound * abs(scale);
  return h;
}

HPolytope::HPolytope(std::size_t dimension, const std::vector<Halfspace>& hs) : dimension_(dimension) {
  for (const auto& h : hs) add(h);
}

void HPolytope::add(const Halfspace& h) {
  check_dimension(dimension_, h.normal.size());
  const Halfspace c = make_halfspace(h.normal, h.bound);
  for (auto& existing : halfspaces_) {
    if (existing.normal == c.normal) {
      existing.bound = std::min(existing.bound, c.bound);
      return;
    }
  }
  halfspaces_.push_back(c);
}

HPolytope from_functionals(const std::vector<Functional>& fs, std::size_t dimension, const Rational& bound) {
  HPolytope p(dimension);
  for (const auto& f : fs) {
    check_dimension(dimension, f.coefficients.size());
    if (std::all_of(f.coefficients.begin(), f.coefficients.end(), [](const Rational& c) { return c == 0; })) continue;
    p.add(make_halfspace(f.coefficients, bound));
  }
  return p;
}

VPolytope vertices(const HPolytope& p) {
  const std::size_t d = p.dimension();
  const auto& hs = p.halfspaces();
  {
    Matrix all(hs.size(), d);
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) all(i, j) = hs[i].normal[j];
    if (hs.empty() || rank(all) < d) throw GeometryError("unbounded: constraint normals do not span the space");
  }
  std::set<RationalVector> found;
  std::vector<std::size_t> pick(d);
  // Iterate over increasing d-subsets of slab indices.
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    Matrix n(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) n(r, c) = hs[pick[r]].normal[c];
    if (auto inv = inverse(n)) {
      for (unsigned mask = 0; mask < (1u << d); ++mask) {
        RationalVector rhs(d);
        for (std::size_t r = 0; r < d; ++r) rhs[r] = (mask >> r & 1u) ? Rational(-hs[pick[r]].bound) : hs[pick[r]].bound;
        RationalVector x = (*inv) * rhs;
        const bool feasible = std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return abs(dot(h.normal, x)) <= h.bound; });
        if (feasible) found.insert(std::move(x));
      }
    }
    // next combination
    std::size_t k = d;
    while (k > 0 && pick[k - 1] == hs.size() - d + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {d, std::vector<RationalVector>(found.begin(), found.end())};
}

const char* to_string(Position p) {
  switch (p) {
    case Position::interior: return "interior";
    case Position::boundary: return "boundary";
    case Position::outside: return "outside";
  }
  return "?";
}

Position contains(const HPolytope& p, const RationalVector& x) {
  check_dimension(p.dimension(), x.size());
  bool on_boundary = false;
  for (const auto& h : p.halfspaces()) {
    const Rational v = abs(dot(h.normal, x));
    if (v > h.bound) return Position::outside;
    if (v == h.bound) on_boundary = true;
  }
  return on_boundary ? Position::boundary : Position::interior;
}

bool is_vertex(const HPolytope& p, const RationalVector& x) {
  if (contains(p, x) == Position::outside) return false;
  std::vector<RationalVector> active;
  for (const auto& h : p.halfspaces()) {
    if (abs(dot(h.normal, x)) == h.bound) active.push_back(h.normal);
  }
  if (active.size() < p.dimension()) return false;
  return rank(Matrix::from_rows(active)) == p.dimension();
}

Rational gauge_outer(const RationalVector& x, const std::vector<Functional>& fs) {
  Rational best = 0;
  for (const auto& f : fs) best = std::max(best, abs(f.apply(x)));
  return best;
}

std::optional<GaugeCertificate> gauge_inner_certificate(const RationalVector& x, const VPolytope& v,
                                                        const std::vector<RationalVector>& lineality) {
  const std::size_t d = x.size();
  check_dimension(v.dimension, d);
  for (const auto& w : lineality) check_dimension(d, w.size());
  const std::size_t nv = v.vertices.size();
  const std::size_t nl = lineality.size();
  // Columns: vertex weights, then (+, -) parts of each lineality coefficient.
  Matrix a(d, nv + 2 * nl);
  RationalVector cost(nv + 2 * nl, Rational(0));
  for (std::size_t j = 0; j < nv; ++j) {
    for (std::size_t i = 0; i < d; ++i) a(i, j) = v.vertices[j][i];
    cost[j] = 1;
  }
  for (std::size_t j = 0; j < nl; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      a(i, nv + 2 * j) = lineality[j][i];
      a(i, nv + 2 * j + 1) = -lineality[j][i];
    }
  }
  const LpResult r = solve_lp(a, x, cost);
  if (r.status != LpStatus::optimal) return std::nullopt;
  GaugeCertificate cert;
  cert.value = r.value;
  cert.weights.assign(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(nv));
  for (std::size_t j = 0; j < nl; ++j) cert.lineality.push_back(r.x[nv + 2 * j] - r.x[nv + 2 * j + 1]);
  return cert;
}

std::optional<Rational> gauge_inner(const RationalVector& x, const VPolytope& v) {
  auto cert = gauge_inner_certificate(x, v);
  if (!cert) return std::nullopt;
  return cert->value;
}

VPolytope reduce(const VPolytope& v) {
  std::set<RationalVector> unique;
  for (const auto& p : v.vertices) {
    check_dimension(v.dimension, p.size());
    unique.insert(p);
  }
  std::vector<RationalVector> kept(unique.begin(), unique.end());
  for (std::size_t k = 0; k < kept.size();) {
    // Is kept[k] a convex combination of the other kept points?
    const std::size_t others = kept.size() - 1;
    Matrix a(v.dimension + 1, others);
    RationalVector b(v.dimension + 1);
    for (std::size_t j = 0, col = 0; j < kept.size(); ++j) {
      if (j == k) continue;
      for (std::size_t i = 0; i < v.dimension; ++i) a(i, col) = kept[j][i];
      a(v.dimension, col) = 1;
      ++col;
    }
    for (std::size_t i = 0; i < v.dimension; ++i) b[i] = kept[k][i];
    b[v.dimension] = 1;
    const bool redundant = others > 0 && solve_lp(a, b, RationalVector(others, Rational(0))).status == LpStatus::optimal;
    if (redundant) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return {v.dimension, std::move(kept)};
}

}  // namespace stablegenus
