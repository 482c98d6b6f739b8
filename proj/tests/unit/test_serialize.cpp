#include <gtest/gtest.h>

#include "stablegenus/expr_parser.hpp"
#include "stablegenus/serialize.hpp"
#include "test_support.hpp"

using namespace stablegenus;

TEST(Serialize, Rationals) {
  EXPECT_EQ(rational_json(Rational(3, 2)), "3/2");
  EXPECT_EQ(rational_json(Rational(-4)), "-4");
  EXPECT_EQ(vector_json(sgtest::V({"1", "-1/3"})).dump(), R"(["1","-1/3"])");
}

TEST(Serialize, BoundReport) {
  const KnotExpr e = parse_expr("3*T(2,7) - 2*T(2,11)");
  const BoundReport r = g_st_interval(e, Category::topological, default_registry());
  const auto j = to_json(r, default_registry());
  EXPECT_EQ(j.at("schema"), kSchema);
  EXPECT_EQ(j.at("lower"), "2");
  EXPECT_EQ(j.at("upper"), "2");
  EXPECT_EQ(j.dump(), to_json(g_st_interval(e, Category::topological, default_registry()), default_registry()).dump());
}

TEST(Serialize, UnitBall) {
  const auto j = to_json(unit_ball({torus(2, 7), torus(2, 11)}, Category::topological, default_registry()));
  EXPECT_EQ(j.at("schema"), kSchema);
  EXPECT_EQ(j.at("functionals").size(), 8u);
}

TEST(Serialize, CertificateRoundTrip) {
  const CGCertificate c = certify(Rational(1, 2), Rational(-3) * KnotExpr(torus(2, 7)));
  const auto j = to_json(c);
  const CGCertificate back = certificate_from_json(j);
  EXPECT_EQ(back.eps, c.eps);
  EXPECT_EQ(back.j, c.j);
  EXPECT_EQ(back.sevenths, c.sevenths);
  EXPECT_EQ(back.transcript, c.transcript);
  EXPECT_TRUE(verify_certificate(back));
  EXPECT_EQ(to_json(back).dump(), j.dump());
  EXPECT_THROW(certificate_from_json(nlohmann::json::object()), InputError);
}

TEST(Serialize, SegmentsCsv) {
  const std::string csv = segments_csv(parse_expr("T(2,3)"));
  EXPECT_EQ(csv, "t_lo,t_hi,value\n0,1/6,0\n1/6,1/2,1\n");
}

TEST(Serialize, TableParsing) {
  const SubadditiveTable t = parse_table("# comment\n1 1\n2 3/2\n\n3 2\n");
  EXPECT_EQ(t.values().size(), 3u);
  EXPECT_EQ(t.values().at(2), Rational(3, 2));
  EXPECT_THROW(parse_table("1\n"), InputError);
  EXPECT_THROW(parse_table("0 1\n"), InputError);
}
