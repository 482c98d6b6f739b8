#include <gtest/gtest.h>

#include <random>

#include "stablegenus/polytope.hpp"
#include "test_support.hpp"

using namespace stablegenus;
using sgtest::Q;
using sgtest::V;

namespace {

HPolytope unit_square() {
  HPolytope p(2);
  p.add(make_halfspace({1, 0}, 1));
  p.add(make_halfspace({0, 1}, 1));
  return p;
}

std::vector<Functional> section4_functionals() {
  std::vector<Functional> fs;
  for (auto v : std::vector<RationalVector>{{0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}})
    fs.push_back({"", v});
  return fs;
}

// Caratheodory in the plane: x is in conv(V) iff it lies in a triangle (possibly
// degenerate) with corners in V.
bool in_triangle(const RationalVector& a, const RationalVector& b, const RationalVector& c, const RationalVector& x) {
  auto cross = [](const RationalVector& o, const RationalVector& p, const RationalVector& q) {
    return Rational((p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]));
  };
  const Rational d1 = cross(a, b, x), d2 = cross(b, c, x), d3 = cross(c, a, x);
  const bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
  if (cross(a, b, c) != 0) return !(has_neg && has_pos);
  return false;
}

bool in_hull_2d(const std::vector<RationalVector>& pts, const RationalVector& x) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (in_triangle(pts[i], pts[j], pts[k], x)) return true;
  return false;
}

}  // namespace

TEST(Polytope, HalfspaceCanonicalForm) {
  const Halfspace h = make_halfspace(V({"-1/2", "-3/4"}), Q("1/4"));
  EXPECT_EQ(h.normal, V({"2", "3"}));
  EXPECT_EQ(h.bound, 1);
  EXPECT_THROW(make_halfspace({0, 0}, 1), std::invalid_argument);
  EXPECT_THROW(make_halfspace({1, 0}, 0), std::invalid_argument);
}

TEST(Polytope, UnitSquareVertices) {
  const VPolytope v = vertices(unit_square());
  EXPECT_EQ(v.vertices, (std::vector<RationalVector>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}));
  EXPECT_EQ(contains(unit_square(), {0, 0}), Position::interior);
  EXPECT_EQ(contains(unit_square(), {2, 0}), Position::outside);
  EXPECT_TRUE(is_vertex(unit_square(), {1, 1}));
}

TEST(Polytope, UnboundedDetected) {
  HPolytope p(2);
  p.add(make_halfspace({1, 1}, 1));
  EXPECT_THROW(vertices(p), GeometryError);
}

TEST(Polytope, Section4Ball) {
  const HPolytope p = from_functionals(section4_functionals(), 2);
  const VPolytope v = vertices(p);
  EXPECT_NE(std::find(v.vertices.begin(), v.vertices.end(), V({"3/2", "-1"})), v.vertices.end());
  EXPECT_NE(std::find(v.vertices.begin(), v.vertices.end(), V({"-3/2", "1"})), v.vertices.end());
  EXPECT_EQ(contains(p, V({"0", "1/5"})), Position::boundary);
  EXPECT_FALSE(is_vertex(p, V({"0", "1/5"})));
  EXPECT_TRUE(is_vertex(p, V({"3/2", "-1"})));
}

TEST(Polytope, GaugeOuter) {
  const auto fs = section4_functionals();
  EXPECT_EQ(gauge_outer({0, 0}, fs), 0);
  EXPECT_EQ(gauge_outer({3, -2}, fs), 2);
  EXPECT_EQ(gauge_outer({1, 0}, fs), 3);
}

TEST(Polytope, GaugeInnerSquare) {
  const VPolytope sq{2, {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}};
  EXPECT_EQ(gauge_inner({1, 0}, sq), Rational(1));
  const VPolytope line{2, {{1, 0}, {-1, 0}}};
  EXPECT_FALSE(gauge_inner({0, 1}, line).has_value());
}

TEST(Polytope, GaugeInnerMatchesLambdaScan) {
  // Hull of +-(1/3,0), +-(1/2,-1/2), +-(3/2,-1), +-(1,-1/2).
  const std::vector<RationalVector> pts = {V({"1/3", "0"}),  V({"-1/3", "0"}), V({"1/2", "-1/2"}), V({"-1/2", "1/2"}),
                                           V({"3/2", "-1"}), V({"-3/2", "1"}), V({"1", "-1/2"}),   V({"-1", "1/2"})};
  const VPolytope hull{2, pts};
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    RationalVector x{sgtest::random_rational(rng, 4, 3), sgtest::random_rational(rng, 4, 3)};
    if (x[0] == 0 && x[1] == 0) continue;
    const auto g = gauge_inner(x, hull);
    ASSERT_TRUE(g.has_value());
    // lambda = g works, and every lambda on a fine grid below g fails.
    RationalVector scaled{x[0] / *g, x[1] / *g};
    EXPECT_TRUE(in_hull_2d(pts, scaled));
    for (int k = 1; k < 60; ++k) {
      const Rational lam = *g * Rational(k, 60);
      RationalVector y{x[0] / lam, x[1] / lam};
      EXPECT_FALSE(in_hull_2d(pts, y));
    }
  }
  EXPECT_EQ(gauge_inner({1, 0}, hull), Rational(3));
}

TEST(Polytope, Reduce) {
  EXPECT_EQ(reduce({2, {{0, 0}, {1, 0}, {-1, 0}}}).vertices, (std::vector<RationalVector>{{-1, 0}, {1, 0}}));
  EXPECT_EQ(reduce({2, {{0, 0}, {1, 1}, {2, 2}}}).vertices, (std::vector<RationalVector>{{0, 0}, {2, 2}}));
  EXPECT_EQ(reduce({2, {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}, {0, 0}}}).vertices.size(), 4u);
}

TEST(Polytope, RandomRoundTrip) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + trial % 3;
    HPolytope p(d);
    // Coordinate slabs keep the body bounded.
    for (std::size_t i = 0; i < d; ++i) {
      RationalVector e(d, Rational(0));
      e[i] = 1;
      p.add(make_halfspace(e, 2));
    }
    std::uniform_int_distribution<int> extra(0, 7);
    for (int k = extra(rng); k > 0; --k) {
      RationalVector n(d);
      for (auto& c : n) c = sgtest::random_rational(rng, 3, 2);
      if (std::all_of(n.begin(), n.end(), [](const Rational& c) { return c == 0; })) continue;
      p.add(make_halfspace(n, abs(sgtest::random_rational(rng, 3, 2)) + 1));
    }
    const VPolytope v = vertices(p);
    std::vector<bool> touched(p.halfspaces().size(), false);
    for (const auto& x : v.vertices) {
      RationalVector neg = x;
      for (auto& c : neg) c = -c;
      EXPECT_NE(std::find(v.vertices.begin(), v.vertices.end(), neg), v.vertices.end());
      std::size_t active = 0;
      for (std::size_t h = 0; h < p.halfspaces().size(); ++h) {
        const Rational val = abs(dot(p.halfspaces()[h].normal, x));
        EXPECT_LE(val, p.halfspaces()[h].bound);
        if (val == p.halfspaces()[h].bound) {
          ++active;
          touched[h] = true;
        }
      }
      EXPECT_GE(active, std::min(d, p.halfspaces().size()));
      EXPECT_TRUE(is_vertex(p, x));
      EXPECT_EQ(gauge_inner(x, v), Rational(1));
    }
    // Untouched slabs must be redundant: dropping one leaves the vertex set unchanged.
    for (std::size_t h = 0; h < touched.size(); ++h) {
      if (touched[h]) continue;
      HPolytope q(d);
      for (std::size_t k = 0; k < p.halfspaces().size(); ++k)
        if (k != h) q.add(p.halfspaces()[k]);
      EXPECT_EQ(vertices(q).vertices, v.vertices);
    }
  }
}

TEST(Polytope, GaugeOuterSeminorm) {
  std::mt19937 rng(19);
  const auto fs = section4_functionals();
  for (int i = 0; i < 100; ++i) {
    RationalVector x{sgtest::random_rational(rng, 9, 4), sgtest::random_rational(rng, 9, 4)};
    RationalVector y{sgtest::random_rational(rng, 9, 4), sgtest::random_rational(rng, 9, 4)};
    const Rational c = abs(sgtest::random_rational(rng, 9, 4));
    EXPECT_EQ(gauge_outer({c * x[0], c * x[1]}, fs), c * gauge_outer(x, fs));
    EXPECT_LE(gauge_outer({x[0] + y[0], x[1] + y[1]}, fs), gauge_outer(x, fs) + gauge_outer(y, fs));
  }
}
