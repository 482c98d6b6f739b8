#include "stablegenus/casson_gordon.hpp"

#include <algorithm>

#include "stablegenus/expr_parser.hpp"
#include "stablegenus/signatures.hpp"

namespace stablegenus {

Rational gilmer_dim(long n, const Rational& g) {
  if (n < 1 || g < 0) throw InputError("gilmer_dim: need n >= 1 and g >= 0");
  return Rational(n) - 2 * g;
}

Rational gilmer_bound(const Rational& g) {
  if (g < 0) throw InputError("gilmer_bound: need g >= 0");
  return 6 * g;
}

std::pair<FpSubspace, FpSubspace> split_invariant(const FpSubspace& h, const DeckAction& d) {
  if (h.prime() != 7 || d.prime() != 7) throw FieldError("eigenvalue split is defined over F_7");
  if (h.ambient() != d.dimension()) throw FieldError("dimension mismatch");
  for (const auto& row : h.basis())
    if (!h.contains(apply(d.matrix(), row, 7))) throw FieldError("not invariant");
  FpSubspace h2 = intersect(h, d.eigenspace(2));
  FpSubspace h4 = intersect(h, d.eigenspace(4));
  if (h2.dimension() + h4.dimension() != h.dimension()) throw FieldError("unexpected eigenstructure");
  return {std::move(h2), std::move(h4)};
}

FpVector max_support_vector(const FpSubspace& h) {
  if (h.dimension() == 0) throw FieldError("max_support_vector: zero subspace");
  FpVector v(h.ambient(), 0);
  for (const auto& row : h.basis())
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = (v[k] + row[k]) % h.prime();
  return v;
}

namespace {

Rational three_term(const KnotExpr& j, int a) {
  Rational s = 0;
  for (int m : {1, 2, 4}) s += evaluate(j, ratio((a * m) % 7, 7));
  return s;
}

}  // namespace

Rational cg_sigma(const CGFamily& family, const Character& chi) {
  if (chi.a < 0 || chi.a > 6 || chi.b < 0 || chi.b > 6) throw InputError("character indices must lie in 0..6");
  if (chi.a != 0 && chi.b != 0) throw InputError("formula not available for mixed characters");
  if (chi.a != 0) return three_term(family.j1, chi.a);
  if (chi.b != 0) return three_term(family.j2, chi.b);
  return 0;
}

Rational cg_threshold(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw InputError("eps must lie in (0, 1)");
  return 6 * (1 - eps) / eps;
}

namespace {

Rational min_seventh(const KnotExpr& j) {
  const auto [s1, s2, s3] = sigma_sevenths(j);
  return std::min({s1, s2, s3});
}

KnotExpr mirrored_torus(int k, int m) { return Rational(-m) * KnotExpr(torus(2, k)); }

}  // namespace

KnotExpr construct_J(const Rational& eps, const SearchSpace& space) {
  const Rational target = cg_threshold(eps);
  std::optional<KnotExpr> best;
  Rational best_value;
  auto consider = [&](const KnotExpr& j) {
    const Rational v = min_seventh(j);
    if (!best || v > best_value) {
      best = j;
      best_value = v;
    }
    return v >= target;
  };
  std::vector<int> ks;
  for (int k = 3; k <= space.max_k; k += 2) ks.push_back(k);
  for (int k : ks)
    for (int m = 1; m <= space.max_multiplicity; ++m)
      if (consider(mirrored_torus(k, m))) return mirrored_torus(k, m);
  for (int m = 2; m <= space.max_multiplicity; ++m) {
    for (std::size_t i = 0; i < ks.size(); ++i)
      for (std::size_t l = i + 1; l < ks.size(); ++l)
        for (int m1 = 1; m1 < m; ++m1) {
          const KnotExpr j = mirrored_torus(ks[i], m1) + mirrored_torus(ks[l], m - m1);
          if (consider(j)) return j;
        }
  }
  std::string msg = "search exhausted";
  if (best) msg += "; best candidate " + to_text(*best) + " reaches " + to_string(best_value) + " < " + to_string(target);
  throw SearchExhausted(msg, best);
}

namespace {

std::vector<std::string> chain(const CGCertificate& c) {
  const std::string e = to_string(c.eps);
  const std::string m = to_string(c.threshold);
  std::vector<std::string> t;
  t.push_back("K = K(J, -J) with J = " + to_text(c.j) + ", eps = " + e);
  t.push_back("M = 6(1 - eps)/eps = " + m);
  for (int a = 1; a <= 3; ++a) {
    const Rational& s = c.sevenths[static_cast<std::size_t>(a - 1)];
    t.push_back("sigma'_{" + std::to_string(a) + "/7}(J) = " + to_string(s) + (s >= c.threshold ? " >= " : " < ") + m);
  }
  t.push_back("sigma'_{a/7}(J) for a = 4, 5, 6 repeats these by symmetry");
  t.push_back("suppose g_4(nK) <= (1/2)(1 - eps) n = g for some n");
  t.push_back("H_1 of the 3-fold cover of nK is Z_7^{2n}; the bounded subspace H has dim H = n - 2g >= eps n");
  t.push_back("H is deck-invariant, so H = H_2 + H_4 and one summand has dimension >= (1/2) eps n");
  t.push_back("case H_2: rref gives a vector with >= (1/2) eps n nonzero coordinates, each contributing some sigma'_{a/7}(J) >= M");
  t.push_back("case H_4: switching eigenspaces interchanges J and -J, with the same absolute values");
  t.push_back("|sigma(nK, chi)| >= (1/2) eps n M >= 6 (1/2)(1 - eps) n = 6g, contradicting |sigma| <= 6g on H");
  return t;
}

}  // namespace

CGCertificate certify(const Rational& eps, const KnotExpr& j) {
  CGCertificate c;
  c.eps = eps;
  c.j = j;
  c.threshold = cg_threshold(eps);
  const auto [s1, s2, s3] = sigma_sevenths(j);
  c.sevenths = {s1, s2, s3};
  c.upper = Rational(1, 2);
  c.lower = 0;
  for (int a = 1; a <= 3; ++a) {
    const Rational& s = c.sevenths[static_cast<std::size_t>(a - 1)];
    if (s < c.threshold) {
      c.failure = "a = " + std::to_string(a) + ": sigma'_{" + std::to_string(a) + "/7}(J) = " + to_string(s) + " < M = " +
                  to_string(c.threshold);
      break;
    }
  }
  c.valid = !c.failure && c.threshold * eps >= 6 * (1 - eps);
  c.transcript = chain(c);
  if (c.valid) {
    c.lower = (1 - eps) / 2;
    c.transcript.push_back("conclusion: g_st(K) in [" + to_string(c.lower) + ", 1/2]");
  } else {
    c.transcript.push_back("no conclusion: " + c.failure.value_or("threshold condition fails"));
  }
  return c;
}

bool verify_certificate(const CGCertificate& cert) {
  try {
    const CGCertificate fresh = certify(cert.eps, cert.j);
    return fresh.sevenths == cert.sevenths && fresh.threshold == cert.threshold && fresh.valid == cert.valid &&
           fresh.lower == cert.lower && fresh.upper == cert.upper && fresh.failure == cert.failure;
  } catch (const InputError&) {
    return false;
  }
}

std::pair<Rational, Rational> variant_bounds(long n) {
  if (n < 1) throw InputError("variant_bounds: need n >= 1");
  return {ratio(n - 1, n), ratio(n, n + 1)};
}

}  // namespace stablegenus
