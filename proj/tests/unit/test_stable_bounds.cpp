#include <gtest/gtest.h>

#include <random>

#include "stablegenus/expr_parser.hpp"
#include "stablegenus/stable_bounds.hpp"
#include "test_support.hpp"

using namespace stablegenus;
using sgtest::Q;
using sgtest::V;

namespace {

std::string interval(const BoundReport& r) {
  return "[" + to_string(r.lower.value) + ", " + (r.upper.value ? to_string(*r.upper.value) : "inf") + "]";
}

}  // namespace

TEST(StableBounds, DefaultRegistryLoads) {
  const Registry& reg = default_registry();
  EXPECT_EQ(reg.size(), 14u);
  for (const auto& f : reg) EXPECT_FALSE(f.provenance.empty());
}

TEST(StableBounds, RegistryValidation) {
  auto doc = [](const std::string& knot, const std::string& coef, const std::string& kind, const std::string& value) {
    return std::string(R"({"schema":"stablegenus/1","facts":[{"basis":[")") + knot + R"("],"coefficients":[)" + coef +
           R"(],"kind":")" + kind + R"(","value":")" + value + R"(","provenance":"test"}]})";
  };
  EXPECT_THROW(parse_registry("{}"), InputError);
  EXPECT_THROW(parse_registry(doc("T(2,3)", "1", "g4_upper", "0")), InputError);
  EXPECT_THROW(parse_registry(doc("T(2,3)", "0", "g4_exact", "1")), InputError);
  EXPECT_THROW(parse_registry(doc("T(2,4)", "1", "g4_exact", "1")), InputError);
  const Registry r = parse_registry(doc("-T(2,3)", "2", "g4_upper", "2"));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].expr(), Rational(-2) * KnotExpr(torus(2, 3)));
}

TEST(StableBounds, LowerBoundExamples) {
  const LowerBound a = lower_bound(parse_expr("3*T(2,7) - 2*T(2,11)"), Category::topological);
  EXPECT_EQ(a.value, 2);
  EXPECT_EQ(lower_bound(KnotExpr(torus(3, 7)), Category::topological).value, 5);
  const LowerBound s = lower_bound(KnotExpr(torus(3, 7)), Category::smooth);
  EXPECT_EQ(s.value, 6);
  EXPECT_EQ(s.witness.label, "tau");
}

TEST(StableBounds, UpperBoundExamples) {
  const Registry& reg = default_registry();
  const KnotExpr e = parse_expr("3*T(2,7) - 2*T(2,11)");
  const UpperBound u = upper_bound(e, reg);
  ASSERT_TRUE(u.value);
  EXPECT_EQ(*u.value, 2);
  EXPECT_TRUE(verify_upper(e, u, reg));

  const UpperBound fig8 = upper_bound(KnotExpr(catalog("4_1")), reg);
  ASSERT_TRUE(fig8.value);
  EXPECT_EQ(*fig8.value, 0);
  EXPECT_EQ(fig8.certificate.lines.size(), 1u);

  const KnotExpr x = parse_expr("5_1 - 2*6_2");
  const UpperBound ux = upper_bound(x, reg);
  ASSERT_TRUE(ux.value);
  EXPECT_EQ(*ux.value, 1);
  EXPECT_TRUE(verify_upper(x, ux, reg));

  // No fact mentions T(2,13).
  EXPECT_FALSE(upper_bound(KnotExpr(torus(2, 13)), reg).value.has_value());
}

TEST(StableBounds, TamperedCertificateRejected) {
  const Registry& reg = default_registry();
  const KnotExpr e = parse_expr("3*T(2,7) - 2*T(2,11)");
  UpperBound u = upper_bound(e, reg);
  u.value = Rational(3, 2);
  EXPECT_FALSE(verify_upper(e, u, reg));
}

TEST(StableBounds, IntervalExamples) {
  const Registry& reg = default_registry();
  const BoundReport a = g_st_interval(parse_expr("3*T(2,7) - 2*T(2,11)"), Category::topological, reg);
  EXPECT_EQ(interval(a), "[2, 2]");
  EXPECT_TRUE(a.determined());
  const BoundReport b = g_st_interval(parse_expr("3_1"), Category::topological, reg);
  EXPECT_EQ(interval(b), "[1, 1]");
  const BoundReport c = g_st_interval(KnotExpr(torus(3, 7)), Category::topological, reg);
  EXPECT_EQ(interval(c), "[5, 6]");
  EXPECT_FALSE(c.determined());
  EXPECT_EQ(interval(g_st_interval(KnotExpr(torus(3, 7)), Category::smooth, reg)), "[6, 6]");
  for (const auto* r : {&a, &b, &c}) EXPECT_TRUE(verify(*r, reg));
}

TEST(StableBounds, UnitBallSection4) {
  const UnitBallReport r = unit_ball({torus(2, 7), torus(2, 11)}, Category::topological, default_registry());
  EXPECT_EQ(r.functionals.size(), 8u);
  ASSERT_TRUE(r.outer_vertices);
  const auto& vs = r.outer_vertices->vertices;
  EXPECT_NE(std::find(vs.begin(), vs.end(), V({"3/2", "-1"})), vs.end());
  EXPECT_EQ(contains(r.outer, V({"0", "1/5"})), Position::boundary);
  EXPECT_TRUE(r.sandwich);
  // The facts pin down every outer vertex, so the two balls coincide.
  EXPECT_EQ(r.inner.vertices, vs);
}

TEST(StableBounds, UnitBallSection6) {
  const UnitBallReport r =
      unit_ball({catalog("3_1"), catalog("5_1"), catalog("5_2"), catalog("6_2")}, Category::topological, default_registry());
  ASSERT_TRUE(r.outer_vertices);
  EXPECT_EQ(r.outer_vertices->vertices.size(), 24u);
  EXPECT_TRUE(r.sandwich);
}

TEST(StableBounds, SmoothBallIsSmaller) {
  const std::vector<BasisKnot> basis{torus(3, 7), torus(2, 5)};
  const UnitBallReport top = unit_ball(basis, Category::topological, default_registry());
  const UnitBallReport sm = unit_ball(basis, Category::smooth, default_registry());
  EXPECT_NE(contains(top.outer, V({"1/5", "0"})), Position::outside);
  EXPECT_EQ(contains(sm.outer, V({"1/5", "0"})), Position::outside);
}

TEST(StableBounds, UnboundedBallIsReported) {
  const UnitBallReport r = unit_ball({catalog("4_1"), torus(2, 3)}, Category::topological, default_registry());
  EXPECT_FALSE(r.outer_vertices.has_value());
  EXPECT_EQ(r.outer_note.rfind("unbounded", 0), 0u);
  EXPECT_EQ(r.inner_lineality.size(), 1u);
  EXPECT_TRUE(r.sandwich);
}

class BoundProperties : public ::testing::Test {
 protected:
  std::vector<BasisKnot> basis{torus(2, 7), torus(2, 11), catalog("3_1"), catalog("5_2")};
};

TEST_F(BoundProperties, SeminormMirrorAndSandwich) {
  std::mt19937 rng(41);
  const Registry& reg = default_registry();
  for (int i = 0; i < 40; ++i) {
    const KnotExpr x = sgtest::random_expr(rng, basis);
    const KnotExpr y = sgtest::random_expr(rng, basis);
    const Rational lambda = sgtest::random_rational(rng, 5, 3);
    for (Category c : {Category::topological, Category::smooth}) {
      const Rational lx = lower_bound(x, c).value;
      EXPECT_EQ(lower_bound(lambda * x, c).value, abs(lambda) * lx);
      EXPECT_LE(lower_bound(x + y, c).value, lx + lower_bound(y, c).value);
      EXPECT_EQ(lower_bound(mirror(x), c).value, lx);
      const BoundReport r = g_st_interval(x, c, reg);
      if (r.upper.value) EXPECT_LE(r.lower.value, *r.upper.value);
      EXPECT_TRUE(verify(r, reg));
    }
  }
}

TEST_F(BoundProperties, Multiplicativity) {
  const Registry& reg = default_registry();
  const KnotExpr x = parse_expr("3*T(2,7) - 2*T(2,11)");
  for (long n : {2L, 3L, 7L}) {
    const BoundReport a = g_st_interval(Rational(n) * x, Category::topological, reg);
    const BoundReport b = g_st_interval(x, Category::topological, reg);
    EXPECT_EQ(a.lower.value, n * b.lower.value);
    EXPECT_EQ(*a.upper.value, n * *b.upper.value);
  }
}
