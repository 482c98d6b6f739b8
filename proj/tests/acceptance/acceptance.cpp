// One line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "stablegenus/casson_gordon.hpp"
#include "stablegenus/expr_parser.hpp"
#include "stablegenus/fekete.hpp"
#include "stablegenus/serialize.hpp"
#include "stablegenus/signatures.hpp"
#include "stablegenus/stable_bounds.hpp"
#include "test_support.hpp"

using namespace stablegenus;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RationalVector neg(RationalVector v) {
  for (auto& x : v) x = -x;
  return v;
}

void functional_list() {
  const auto fs = interval_functionals({torus(2, 7), torus(2, 11)});
  const std::vector<RationalVector> want = {vec({0, 1}), vec({1, 1}), vec({1, 2}), vec({2, 2}),
                                            vec({2, 3}), vec({2, 4}), vec({3, 4}), vec({3, 5})};
  require(fs.size() == want.size(), "expected 8 functionals, got " + std::to_string(fs.size()));
  for (std::size_t i = 0; i < fs.size(); ++i)
    require(fs[i].coefficients == want[i] || fs[i].coefficients == neg(want[i]), "functional " + std::to_string(i) + " differs");
}

void section4_ball() {
  const UnitBallReport r = unit_ball({torus(2, 7), torus(2, 11)}, Category::topological, default_registry());
  require(r.outer_vertices.has_value(), "outer ball unbounded");
  const auto& vs = r.outer_vertices->vertices;
  const RationalVector p = sgtest::V({"3/2", "-1"});
  require(std::count(vs.begin(), vs.end(), p) == 1 && std::count(vs.begin(), vs.end(), neg(p)) == 1,
          "+-(3/2,-1) not both vertices");
  const RationalVector q = sgtest::V({"0", "1/5"});
  require(contains(r.outer, q) == Position::boundary, "(0,1/5) not on boundary");
  require(!is_vertex(r.outer, q), "(0,1/5) is a vertex");
  const BoundReport b = g_st_interval(parse_expr("3*T(2,7) - 2*T(2,11)"), Category::topological, default_registry());
  require(b.lower.value == 2 && b.upper.value && *b.upper.value == 2, "interval is not [2,2]");
  require(verify(b, default_registry()), "bound report does not verify");
}

void section6_ball() {
  const UnitBallReport r = unit_ball({catalog("3_1"), catalog("5_1"), catalog("5_2"), catalog("6_2")},
                                     Category::topological, default_registry());
  require(r.outer_vertices.has_value(), "outer ball unbounded");
  const std::vector<RationalVector> pairs = {
      vec({2, -1, 0, 0}), vec({0, 1, -2, 0}), vec({0, 1, 0, -1}), vec({2, -1, 0, -1}),
      vec({0, 0, 1, 0}),  vec({2, 0, -1, 0}), vec({0, 1, 0, -2}), vec({2, 1, -2, -2}),
      vec({2, 1, -2, -1}), vec({0, 1, -2, 1}), vec({0, 0, 1, -2}), vec({2, 0, -1, -2})};
  const std::set<RationalVector> got(r.outer_vertices->vertices.begin(), r.outer_vertices->vertices.end());
  require(got.size() == 24, "expected 24 vertices, got " + std::to_string(got.size()));
  for (int mask = 0; mask < 16; ++mask) {
    std::set<RationalVector> want;
    for (auto v : pairs) {
      for (int i = 0; i < 4; ++i)
        if (mask & (1 << i)) v[i] = -v[i];
      want.insert(v);
      want.insert(neg(v));
    }
    if (want == got) return;
  }
  require(false, "vertex set differs from the listed pairs under every sign choice");
}

void smooth_vs_topological() {
  const KnotExpr t37(torus(3, 7));
  require(max_half_abs(t37) == 5, "max_half_abs(T(3,7)) != 5");
  require(abs(evaluate(t37, Rational(1, 2))) / 2 == 4, "half |sigma_1/2(T(3,7))| != 4");
  require(tau_torus(3, 7) == 6, "tau(T(3,7)) != 6");
  require(lower_bound(t37, Category::smooth).value == 6, "smooth lower bound != 6");
  const std::vector<BasisKnot> basis{torus(3, 7), torus(2, 5)};
  const UnitBallReport top = unit_ball(basis, Category::topological, default_registry());
  const UnitBallReport sm = unit_ball(basis, Category::smooth, default_registry());
  const RationalVector x = sgtest::V({"1/5", "0"});
  require(contains(top.outer, x) != Position::outside, "(1/5,0) outside the topological ball");
  require(contains(sm.outer, x) == Position::outside, "(1/5,0) inside the smooth ball");
}

void oracle_equivalence() {
  std::mt19937 rng(5);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {2, 7}, {2, 11}, {3, 5}, {3, 7}}) {
    const std::string tag = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    const SeifertMatrix v = seifert_matrix_torus(p, q);
    const StepFunction a = stepfun_from_seifert(v);
    const StepFunction b = torus_jumps(p, q);
    for (int i = 0; i < 100; ++i) {
      const Rational t = sgtest::random_t(rng);
      require(a.averaged_value(t) == b.averaged_value(t), tag + " disagrees at t = " + t.get_str());
    }
    require(alexander_poly(v) == torus_alexander_formula(p, q), tag + " Alexander polynomial differs");
  }
}

void casson_gordon() {
  require(cg_threshold(Rational(1, 2)) == 6, "threshold(1/2) != 6");
  const KnotExpr j = construct_J(Rational(1, 2));
  const auto [s1, s2, s3] = sigma_sevenths(j);
  require(s1 >= 6 && s2 >= 6 && s3 >= 6, "construct_J(1/2) sevenths below 6");
  const auto [r1, r2, r3] = sigma_sevenths(Rational(-3) * KnotExpr(torus(2, 7)));
  require(r1 == 6 && r2 == 12 && r3 == 18, "3*mirror(T(2,7)) sevenths are not (6,12,18)");
  const CGCertificate c = certify(Rational(1, 2), j);
  require(c.valid, "certificate invalid");
  const CGCertificate back = certificate_from_json(nlohmann::json::parse(to_json(c).dump()));
  require(verify_certificate(back), "verifier rejects the serialized certificate");
  require(cg_sigma({j, KnotExpr(), 1}, {0, 0}) == 0, "chi_00 sigma != 0");
}

void fekete() {
  SubadditiveTable half;
  for (long n = 1; n <= 200; ++n) half.set(n, Rational((n + 1) / 2));
  require(fekete_upper(half) == Rational(1, 2), "fekete_upper(ceil(n/2)) != 1/2");

  // Contract: for every N with f(N)/N <= L + eps/2 and B = max_{b<N} f(b), f(n)/n <= L + eps for n >= n0.
  const std::vector<std::pair<Rational, std::function<Rational(long)>>> tables = {
      {Rational(1, 2), [](long n) { return Rational((n + 1) / 2); }},
      {Rational(1, 2), [](long n) { return Rational((n + 1) / 2 + 1); }},
      {Rational(1, 3), [](long n) { return Rational((n + 2) / 3 + 2); }},
      {Rational(1), [](long n) { return Rational(n); }}};
  for (const auto& [limit, f] : tables) {
    SubadditiveTable t;
    for (long n = 1; n <= 200; ++n) t.set(n, f(n));
    require(audit_subadditive(t).empty(), "synthetic table not subadditive");
    for (const Rational eps : {Rational(1, 10), Rational(1, 2), Rational(1)}) {
      for (long N = 1; N <= 200; ++N) {
        if (f(N) / N > limit + eps / 2) continue;
        Rational b = 0;
        for (long m = 1; m < N; ++m) b = std::max(b, f(m));
        for (long n = fekete_n0(N, b, eps).get_si(); n <= 200; ++n)
          require(f(n) / n <= limit + eps, "n0 contract fails at N = " + std::to_string(N) + ", n = " + std::to_string(n));
      }
    }
  }
  SubadditiveTable planted = half;
  planted.set(17, 20);
  const auto v = audit_subadditive(planted);
  require(!v.empty(), "planted violation not flagged");
  for (const auto& x : v)
    require(x.kind == SubadditivityViolation::Kind::sum ? x.n + x.m == 17 : x.n * x.m == 17,
            "spurious violation " + x.to_string());
}

void seminorm_suite() {
  std::mt19937 rng(500);
  const Registry& reg = default_registry();
  const std::vector<std::vector<BasisKnot>> bases = {
      {torus(2, 7), torus(2, 11)},
      {torus(3, 7), torus(2, 5)},
      {catalog("3_1"), catalog("5_1"), catalog("5_2"), catalog("6_2")}};
  for (int i = 0; i < 500; ++i) {
    const auto& basis = bases[static_cast<std::size_t>(i) % bases.size()];
    const Category cat = i % 2 ? Category::smooth : Category::topological;
    const KnotExpr x = sgtest::random_expr(rng, basis);
    const KnotExpr y = sgtest::random_expr(rng, basis);
    const Rational lambda = sgtest::random_rational(rng, 7, 5);
    const std::string tag = " for " + to_text(x);
    const Rational lx = lower_bound(x, cat).value;
    require(lower_bound(lambda * x, cat).value == abs(lambda) * lx, "homogeneity" + tag);
    require(lower_bound(x + y, cat).value <= lx + lower_bound(y, cat).value, "subadditivity" + tag);
    require(lower_bound(mirror(x), cat).value == lx, "mirror symmetry" + tag);
    const BoundReport r = g_st_interval(x, cat, reg);
    require(!r.upper.value || r.lower.value <= *r.upper.value, "lower > upper" + tag);
    if (r.upper.value) {
      const BoundReport s = g_st_interval(lambda * x, cat, reg);
      require(s.upper.value && *s.upper.value == abs(lambda) * *r.upper.value, "upper homogeneity" + tag);
      require(g_st_interval(mirror(x), cat, reg).upper.value == r.upper.value, "upper mirror symmetry" + tag);
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"functional list on T(2,7), T(2,11)", functional_list},
      {"unit ball on T(2,7), T(2,11) and interval [2,2]", section4_ball},
      {"24-vertex ball on 3_1, 5_1, 5_2, 6_2", section6_ball},
      {"smooth versus topological on T(3,7), T(2,5)", smooth_vs_topological},
      {"Seifert path versus closed form on six torus knots", oracle_equivalence},
      {"Casson-Gordon certificate at eps = 1/2", casson_gordon},
      {"Fekete upper bound, n0 contract and audit", fekete},
      {"seminorm properties on 500 random expressions", seminorm_suite}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first;
    if (!ok) std::cout << ": " << detail;
    std::cout << '\n';
    failed += ok ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
