#include <gtest/gtest.h>

#include "stablegenus/linear_program.hpp"
#include "test_support.hpp"

using namespace stablegenus;
using sgtest::Q;

TEST(LinearProgram, SmallOptimum) {
  // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6.
  const Matrix a = Matrix::from_rows({{1, 2, 1, 0}, {3, 1, 0, 1}});
  const LpResult r = solve_lp(a, {4, 6}, {-1, -1, 0, 0});
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, Q("-14/5"));
  EXPECT_EQ(r.x[0], Q("8/5"));
  EXPECT_EQ(r.x[1], Q("6/5"));
}

TEST(LinearProgram, Infeasible) {
  const Matrix a = Matrix::from_rows({{1, 1}});
  EXPECT_EQ(solve_lp(a, {-1}, {1, 1}).status, LpStatus::infeasible);
}

TEST(LinearProgram, Unbounded) {
  const Matrix a = Matrix::from_rows({{1, -1}});
  EXPECT_EQ(solve_lp(a, {1}, {-1, 0}).status, LpStatus::unbounded);
}

TEST(LinearProgram, RedundantRowsAndDegeneracy) {
  // Duplicate constraint rows and a degenerate vertex.
  const Matrix a = Matrix::from_rows({{1, 1, 1}, {2, 2, 2}, {1, 0, 0}});
  const LpResult r = solve_lp(a, {1, 2, 0}, {1, 2, 3});
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, 2);
}
