#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "stablegenus/matrix.hpp"
#include "test_support.hpp"

using namespace stablegenus;

namespace {

// Leibniz formula: independent of elimination.
Rational leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = sgtest::random_rational(rng, 5, 3);
  return m;
}

}  // namespace

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix m = random_matrix(rng, n, n);
    EXPECT_EQ(determinant(m), leibniz(m));
  }
}

TEST(Matrix, InverseAndSolve) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = random_matrix(rng, 4, 4);
    const auto inv = inverse(m);
    if (determinant(m) == 0) {
      EXPECT_FALSE(inv.has_value());
      continue;
    }
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(m * *inv, Matrix::identity(4));
    RationalVector b{1, 2, 3, 4};
    const auto x = solve(m, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m * *x, b);
  }
}

TEST(Matrix, RankOfProducts) {
  std::mt19937 rng(13);
  const Matrix a = random_matrix(rng, 5, 2);
  const Matrix b = random_matrix(rng, 2, 5);
  EXPECT_LE(rank(a * b), 2u);
  EXPECT_EQ(rank(Matrix(3, 3)), 0u);
}

TEST(Matrix, InertiaIsCongruenceInvariant) {
  // Sylvester: P^T D P has the inertia of D for invertible P.
  std::mt19937 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 5;
    Matrix d(n, n);
    int pos = 0, neg = 0, zero = 0;
    std::uniform_int_distribution<int> sgn(-1, 1);
    for (std::size_t i = 0; i < n; ++i) {
      const int s = sgn(rng);
      d(i, i) = s * (1 + static_cast<int>(i));
      (s > 0 ? pos : s < 0 ? neg : zero) += 1;
    }
    Matrix p = random_matrix(rng, n, n);
    if (determinant(p) == 0) continue;
    const Inertia in = symmetric_inertia(p.transpose() * d * p);
    EXPECT_EQ(in.positive, pos);
    EXPECT_EQ(in.negative, neg);
    EXPECT_EQ(in.zero, zero);
  }
}

TEST(Matrix, InertiaWithZeroDiagonal) {
  const Matrix h = Matrix::from_rows({{0, 1}, {1, 0}});
  const Inertia in = symmetric_inertia(h);
  EXPECT_EQ(in.positive, 1);
  EXPECT_EQ(in.negative, 1);
  EXPECT_EQ(in.signature(), 0);
}
