#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stablegenus/rational.hpp"

namespace stablegenus {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  static Matrix from_rows(const std::vector<RationalVector>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  RationalVector row(std::size_t i) const;

  Matrix transpose() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  RationalVector operator*(const RationalVector& x) const;
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(Matrix m);
std::size_t rank(Matrix m);
/// Solves the square system A x = b; nullopt when A is singular.
std::optional<RationalVector> solve(Matrix a, RationalVector b);
std::optional<Matrix> inverse(const Matrix& a);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int signature() const { return positive - negative; }
};

/// Inertia of a symmetric matrix by exact congruence diagonalization.
Inertia symmetric_inertia(Matrix m);

}  // namespace stablegenus
