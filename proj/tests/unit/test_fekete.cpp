#include <gtest/gtest.h>

#include <random>

#include "stablegenus/fekete.hpp"
#include "test_support.hpp"

using namespace stablegenus;

namespace {

SubadditiveTable table_of(long n_max, const std::function<Rational(long)>& f) {
  SubadditiveTable t;
  for (long n = 1; n <= n_max; ++n) t.set(n, f(n));
  return t;
}

}  // namespace

TEST(Fekete, UpperExamples) {
  EXPECT_EQ(fekete_upper(table_of(10, [](long n) { return Rational(n); })), 1);
  SubadditiveTable t;
  t.set(1, 1);
  t.set(2, 1);
  EXPECT_EQ(fekete_upper(t), Rational(1, 2));
  EXPECT_EQ(fekete_upper(table_of(20, [](long n) { return Rational((n + 1) / 2); })), Rational(1, 2));
  EXPECT_THROW(fekete_upper(SubadditiveTable()), std::invalid_argument);
}

TEST(Fekete, N0Formula) {
  EXPECT_EQ(fekete_n0(5, 10, 1), 25);
  EXPECT_EQ(fekete_n0(1, 0, Rational(1, 2)), 1);
  EXPECT_EQ(fekete_n0(3, 1, Rational(3, 4)), 6);  // 8/3 + 3 = 17/3 -> 6
  EXPECT_THROW(fekete_n0(0, 1, 1), std::invalid_argument);
}

TEST(Fekete, Audit) {
  EXPECT_TRUE(audit_subadditive(table_of(30, [](long n) { return Rational(n); })).empty());
  EXPECT_TRUE(audit_subadditive(table_of(50, [](long n) { return Rational((n + 1) / 2); })).empty());
  SubadditiveTable bad;
  bad.set(1, 1);
  bad.set(2, 3);
  const auto v = audit_subadditive(bad);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].n, 1);
  EXPECT_EQ(v[0].m, 1);
}

TEST(Fekete, N0ContractOnSyntheticTables) {
  // f(n) = ceil(n/2) + 1 is subadditive with L = 1/2.
  const auto t = table_of(200, [](long n) { return Rational((n + 1) / 2 + 1); });
  ASSERT_TRUE(audit_subadditive(t).empty());
  const Rational eps(1, 10);
  const Rational L(1, 2);
  for (long N = 1; N <= 200; ++N) {
    if (t.values().at(N) / N > L + eps / 2) continue;
    Rational B = 0;
    for (long b = 1; b < N; ++b) B = std::max(B, t.values().at(b));
    const Integer n0 = fekete_n0(N, B, eps);
    for (long n = n0.get_si(); n <= 200; ++n) EXPECT_LE(t.values().at(n) / n, L + eps) << "N=" << N << " n=" << n;
  }
}
