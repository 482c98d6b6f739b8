#include "stablegenus/signatures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "certified.hpp"

namespace stablegenus {

namespace {

constexpr unsigned kStartBits = 64;

Rational pow2_inv(unsigned bits) {
  Integer d = 1;
  d <<= bits;
  return Rational(Integer(1), d);
}

// z-enclosure of a location at (roughly) the given working precision.
detail::Enclosure z_enclosure(const JumpLocation& loc, unsigned bits) {
  if (loc.is_exact()) return detail::two_cos_two_pi(loc.exact(), bits);
  const auto& r = loc.algebraic();
  const RootInterval ri = refine_to(r.poly, r.z, pow2_inv(bits));
  return {ri.lo, ri.hi};
}

bool has_root_in(const Polynomial& g, const RootInterval& r) {
  if (r.exact()) return g.sign_at(r.lo) == 0;
  return g.sign_at(r.lo) * g.sign_at(r.hi) < 0;
}

// z-order is the reverse of t-order.
std::strong_ordering from_z(const detail::Enclosure& a, const detail::Enclosure& b, bool& decided) {
  decided = true;
  if (a.hi < b.lo) return std::strong_ordering::greater;
  if (b.hi < a.lo) return std::strong_ordering::less;
  decided = false;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_algebraic(const AlgebraicJump& a, const AlgebraicJump& b, unsigned cap_bits) {
  const Polynomial g = gcd(a.poly, b.poly);
  const bool may_coincide = g.degree() >= 1;
  std::vector<Polynomial> g_sturm;
  if (may_coincide) g_sturm = sturm_sequence(g);
  for (unsigned bits = kStartBits; bits <= cap_bits; bits *= 2) {
    const RootInterval ra = refine_to(a.poly, a.z, pow2_inv(bits));
    const RootInterval rb = refine_to(b.poly, b.z, pow2_inv(bits));
    bool decided = false;
    const auto ord = from_z({ra.lo, ra.hi}, {rb.lo, rb.hi}, decided);
    if (decided) return ord;
    if (may_coincide && has_root_in(g, ra) && has_root_in(g, rb)) {
      if (ra.exact() || rb.exact()) {
        // An exact root of g lying in the other's isolating interval is that root.
        return std::strong_ordering::equal;
      }
      const Rational lo = std::min(ra.lo, rb.lo);
      const Rational hi = std::max(ra.hi, rb.hi);
      if (g.sign_at(lo) != 0 && g.sign_at(hi) != 0 && count_roots(g_sturm, lo, hi) == 1) {
        return std::strong_ordering::equal;
      }
    }
  }
  throw PrecisionError("cannot order two signature jumps within " + std::to_string(cap_bits) + " bits");
}

}  // namespace

// ---------------------------------------------------------------------------
// JumpLocation

std::pair<Rational, Rational> JumpLocation::t_interval(unsigned bits) const {
  if (is_exact()) return {exact(), exact()};
  const auto& r = algebraic();
  const RootInterval ri = refine_to(r.poly, r.z, pow2_inv(bits));
  const auto e = detail::angle_from_two_cos(ri.lo, ri.hi, bits);
  return {e.lo, e.hi};
}

Rational JumpLocation::representative() const {
  if (is_exact()) return exact();
  const auto [lo, hi] = t_interval();
  return (lo + hi) / 2;
}

std::string JumpLocation::to_string() const {
  if (is_exact()) return stablegenus::to_string(exact());
  // Decimal-friendly outward rounding of a 64-bit enclosure.
  const auto [lo, hi] = t_interval();
  const Integer scale("1000000000000");
  const Rational lo_r = Rational(floor(lo * scale)) / scale;
  const Rational hi_r = Rational(ceil(hi * scale)) / scale;
  return "[" + stablegenus::to_string(lo_r) + ", " + stablegenus::to_string(hi_r) + "]";
}

std::strong_ordering compare(const JumpLocation& a, const JumpLocation& b, unsigned cap_bits) {
  if (a.is_exact() && b.is_exact()) return cmp(a.exact(), b.exact()) <=> 0;
  if (!a.is_exact() && !b.is_exact()) return compare_algebraic(a.algebraic(), b.algebraic(), cap_bits);
  // Exact rational vs algebraic root. The root's polynomial has no cyclotomic factor,
  // so 2cos(2 pi t) for rational t is never a root and refinement separates them.
  for (unsigned bits = kStartBits; bits <= cap_bits; bits *= 2) {
    bool decided = false;
    const auto ord = from_z(z_enclosure(a, bits), z_enclosure(b, bits), decided);
    if (decided) return ord;
  }
  throw PrecisionError("cannot order a rational point against a signature jump within " +
                       std::to_string(cap_bits) + " bits");
}

std::strong_ordering compare(const JumpLocation& a, const Rational& t, unsigned cap_bits) {
  return compare(a, JumpLocation(t), cap_bits);
}

// ---------------------------------------------------------------------------
// StepFunction

StepFunction::StepFunction(std::vector<Jump> jumps, unsigned cap_bits) : jumps_(std::move(jumps)), cap_bits_(cap_bits) {
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    const Jump& j = jumps_[i];
    if (j.delta == 0 || j.delta % 2 != 0) throw std::invalid_argument("StepFunction: deltas must be even and nonzero");
    if (j.location.is_exact() && (j.location.exact() <= 0 || j.location.exact() > Rational(1, 2))) {
      throw std::invalid_argument("StepFunction: jump outside (0, 1/2]");
    }
    if (i > 0 && compare(jumps_[i - 1].location, j.location, cap_bits_) != std::strong_ordering::less) {
      throw std::invalid_argument("StepFunction: jump locations must be strictly increasing");
    }
  }
}

int StepFunction::value_after(int i) const {
  int v = 0;
  for (int k = 0; k <= i && k < static_cast<int>(jumps_.size()); ++k) v += jumps_[static_cast<std::size_t>(k)].delta;
  return v;
}

Rational StepFunction::averaged_value(const Rational& t_in) const {
  Rational t = t_in - Rational(floor(t_in));
  if (t > Rational(1, 2)) t = 1 - t;
  if (t == 0) return 0;
  Rational v = 0;
  for (const auto& j : jumps_) {
    const auto ord = compare(j.location, t, cap_bits_);
    if (ord == std::strong_ordering::less) {
      v += j.delta;
    } else {
      if (ord == std::strong_ordering::equal) v += Rational(j.delta / 2);
      break;
    }
  }
  return v;
}

StepFunction StepFunction::negated() const {
  std::vector<Jump> js = jumps_;
  for (auto& j : js) j.delta = -j.delta;
  StepFunction out;
  out.jumps_ = std::move(js);
  out.cap_bits_ = cap_bits_;
  return out;
}

StepFunction torus_jumps(int p, int q) {
  const BasisKnot k = torus(p, q);  // validates
  std::vector<std::pair<Rational, int>> pts;
  for (int i = 1; i < p; ++i) {
    for (int j = 1; j < q; ++j) {
      const Rational s = ratio(i * q + j * p, p * q);
      const Rational x = s > 1 ? Rational(s - 1) : s;
      if (x > Rational(1, 2)) continue;
      pts.emplace_back(x, s > 1 ? -2 : 2);
    }
  }
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Jump> jumps;
  for (const auto& [x, d] : pts) {
    if (!jumps.empty() && jumps.back().location.exact() == x) {
      jumps.back().delta += d;
      if (jumps.back().delta == 0) jumps.pop_back();
    } else {
      jumps.push_back({JumpLocation(x), d});
    }
  }
  return StepFunction(std::move(jumps));
}

int hermitian_signature_at_tan(const SeifertMatrix& v, const Rational& s) {
  // Up to the positive factor (1 + s^2) / 2s the pencil is s(V + V^T) + i(V^T - V);
  // its real doubling [[Re, -Im], [Im, Re]] has twice its signature.
  const Matrix m = v.to_rational();
  const Matrix re = s * (m + m.transpose());
  const Matrix im = m.transpose() - m;
  const std::size_t n = v.size();
  Matrix big(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      big(i, j) = re(i, j);
      big(n + i, n + j) = re(i, j);
      big(i, n + j) = -im(i, j);
      big(n + i, j) = im(i, j);
    }
  }
  const Inertia in = symmetric_inertia(std::move(big));
  return in.signature() / 2;
}

namespace {

Rational z_of_tan(const Rational& s) { return 2 * (1 - s * s) / (1 + s * s); }

// A rational s > 0 with z_lo < 2(1 - s^2)/(1 + s^2) < z_hi.
Rational tan_inside(const Rational& z_lo, const Rational& z_hi) {
  Rational lo = 0;  // z = 2
  Rational hi = 1;
  while (z_of_tan(hi) >= z_hi) hi *= 2;
  for (;;) {
    const Rational s = (lo + hi) / 2;
    const Rational z = z_of_tan(s);
    if (z <= z_lo) hi = s;
    else if (z >= z_hi) lo = s;
    else return s;
  }
}

std::vector<JumpLocation> circle_roots(const LaurentPolynomial& delta) {
  Polynomial p = alexander_in_z(delta);
  std::vector<JumpLocation> out;
  const int d = p.degree();
  const int n_max = std::max(6, 8 * d * d);
  for (int n = 1; n <= n_max && p.degree() > 0; ++n) {
    if (totient(n) > 2 * std::max(d, 1)) continue;
    const Polynomial& psi = real_cyclotomic(n);
    if (psi.degree() > p.degree() || !divides(psi, p)) continue;
    while (psi.degree() <= p.degree() && divides(psi, p)) p = divmod(p, psi).first;
    for (int k = 1; 2 * k <= n; ++k) {
      if (std::gcd(k, n) == 1) out.emplace_back(Rational(k, n));
    }
  }
  if (p.degree() > 0) {
    const Polynomial r = squarefree_part(p).primitive();
    // Descending z is ascending t.
    auto roots = isolate_roots(r, Rational(-2), Rational(2));
    std::reverse(roots.begin(), roots.end());
    for (auto& iv : roots) out.emplace_back(AlgebraicJump{r, iv});
  }
  return out;
}

}  // namespace

StepFunction stepfun_from_seifert(const SeifertMatrix& v, unsigned cap_bits) {
  std::vector<JumpLocation> locs = circle_roots(alexander_poly(v));
  std::sort(locs.begin(), locs.end(), [cap_bits](const JumpLocation& a, const JumpLocation& b) {
    return compare(a, b, cap_bits) == std::strong_ordering::less;
  });
  // t = 1/2 never changes sigma' (sigma is symmetric there); it has no gap on its right.
  std::erase_if(locs, [](const JumpLocation& l) { return l.is_exact() && l.exact() == Rational(1, 2); });

  // z-enclosures of consecutive locations, refined until they are pairwise disjoint.
  std::vector<detail::Enclosure> encl(locs.size());
  for (unsigned bits = kStartBits;; bits *= 2) {
    if (bits > cap_bits) throw PrecisionError("cannot separate signature jumps within " + std::to_string(cap_bits) + " bits");
    for (std::size_t i = 0; i < locs.size(); ++i) encl[i] = z_enclosure(locs[i], bits);
    bool separated = true;
    for (std::size_t i = 0; i + 1 < locs.size(); ++i) {
      if (!(encl[i + 1].hi < encl[i].lo)) separated = false;
    }
    if (separated) break;
  }

  // gap k lies between location k-1 and k (k = 0: before the first, k = n: up to 1/2).
  std::vector<int> gap_value(locs.size() + 1);
  for (std::size_t k = 0; k <= locs.size(); ++k) {
    const Rational z_hi = k == 0 ? Rational(2) : encl[k - 1].lo;
    const Rational z_lo = k == locs.size() ? Rational(-2) : encl[k].hi;
    gap_value[k] = hermitian_signature_at_tan(v, tan_inside(z_lo, z_hi));
  }
  if (gap_value.front() != 0) throw std::logic_error("signature near t = 0 is not zero");

  std::vector<Jump> jumps;
  for (std::size_t i = 0; i < locs.size(); ++i) {
    const int d = gap_value[i + 1] - gap_value[i];
    if (d != 0) jumps.push_back({locs[i], d});
  }
  return StepFunction(std::move(jumps), cap_bits);
}

StepFunction step_function(const BasisKnot& k, unsigned cap_bits) {
  if (k.is_torus()) {
    const auto& t = k.torus();
    StepFunction f = torus_jumps(t.p, t.q);
    return t.mirrored ? f.negated() : f;
  }
  return stepfun_from_seifert(k.seifert(), cap_bits);
}

Rational evaluate(const KnotExpr& expr, const Rational& t, unsigned cap_bits) {
  Rational total = 0;
  for (const auto& [knot, c] : expr.terms()) total += c * step_function(knot, cap_bits).averaged_value(t);
  return total;
}

// ---------------------------------------------------------------------------
// Functionals

namespace {

struct MergedJump {
  JumpLocation location;
  std::vector<int> delta;  // per basis knot
};

std::vector<MergedJump> merged_jumps(const std::vector<BasisKnot>& basis, unsigned cap_bits) {
  struct Tagged {
    JumpLocation location;
    std::size_t knot;
    int delta;
  };
  std::vector<Tagged> all;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const StepFunction f = step_function(basis[i], cap_bits);
    for (const auto& j : f.jumps()) all.push_back({j.location, i, j.delta});
  }
  std::stable_sort(all.begin(), all.end(), [cap_bits](const Tagged& a, const Tagged& b) {
    return compare(a.location, b.location, cap_bits) == std::strong_ordering::less;
  });
  std::vector<MergedJump> out;
  for (const auto& tj : all) {
    if (out.empty() || compare(out.back().location, tj.location, cap_bits) != std::strong_ordering::equal) {
      out.push_back({tj.location, std::vector<int>(basis.size(), 0)});
    }
    out.back().delta[tj.knot] += tj.delta;
  }
  return out;
}

}  // namespace

std::vector<Functional> dedupe_functionals(const std::vector<Functional>& fs) {
  std::vector<Functional> out;
  for (const auto& f : fs) {
    const bool zero = std::all_of(f.coefficients.begin(), f.coefficients.end(), [](const Rational& c) { return c == 0; });
    if (zero) continue;
    RationalVector neg = f.coefficients;
    for (auto& c : neg) c = -c;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Functional& g) {
      return g.coefficients == f.coefficients || g.coefficients == neg;
    });
    if (!dup) out.push_back(f);
  }
  return out;
}

std::vector<Functional> interval_functionals(const std::vector<BasisKnot>& basis, unsigned cap_bits) {
  if (basis.empty()) throw std::invalid_argument("interval_functionals: empty basis");
  const auto merged = merged_jumps(basis, cap_bits);
  std::vector<Functional> raw;
  std::vector<int> value(basis.size(), 0);
  for (std::size_t k = 0; k < merged.size(); ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) value[i] += merged[k].delta[i];
    Functional f;
    const std::string hi = k + 1 < merged.size() ? merged[k + 1].location.to_string() : "1/2";
    f.label = "(" + merged[k].location.to_string() + ", " + hi + ")";
    for (int v : value) f.coefficients.push_back(ratio(v, 2));
    raw.push_back(std::move(f));
  }
  return dedupe_functionals(raw);
}

int tau_torus(int p, int q) {
  const BasisKnot k = torus(p, q);
  return (k.torus().p - 1) * (k.torus().q - 1) / 2;
}

int s_torus(int p, int q) { return 2 * tau_torus(p, q); }

std::vector<Functional> smooth_functionals(const std::vector<BasisKnot>& basis) {
  if (basis.empty() || !std::all_of(basis.begin(), basis.end(), [](const BasisKnot& k) { return k.is_torus(); })) {
    return {};
  }
  Functional tau{"tau", {}};
  Functional s_half{"s/2", {}};
  for (const auto& k : basis) {
    const auto& t = k.torus();
    const int sign = t.mirrored ? -1 : 1;
    tau.coefficients.emplace_back(sign * tau_torus(t.p, t.q));
    s_half.coefficients.push_back(Rational(sign * s_torus(t.p, t.q)) / 2);
  }
  return {tau, s_half};
}

Rational max_half_abs(const KnotExpr& expr, unsigned cap_bits) {
  if (expr.is_zero()) return 0;
  const auto basis = expr.basis();
  const RationalVector x = expr.coordinates(basis);
  Rational best = 0;
  for (const auto& f : interval_functionals(basis, cap_bits)) best = std::max(best, abs(f.apply(x)));
  return best;
}

std::tuple<Rational, Rational, Rational> sigma_sevenths(const KnotExpr& j, unsigned cap_bits) {
  return {evaluate(j, Rational(1, 7), cap_bits), evaluate(j, Rational(2, 7), cap_bits),
          evaluate(j, Rational(3, 7), cap_bits)};
}

std::vector<Segment> segments(const KnotExpr& expr, unsigned cap_bits) {
  if (expr.is_zero()) return {Segment{std::nullopt, std::nullopt, Rational(0)}};
  const auto basis = expr.basis();
  const RationalVector x = expr.coordinates(basis);
  const auto merged = merged_jumps(basis, cap_bits);
  std::vector<Segment> out;
  std::optional<JumpLocation> lo;
  Rational value = 0;
  for (const auto& m : merged) {
    out.push_back({lo, m.location, value});
    for (std::size_t i = 0; i < basis.size(); ++i) value += x[i] * m.delta[i];
    lo = m.location;
  }
  out.push_back({lo, std::nullopt, value});
  return out;
}

}  // namespace stablegenus
