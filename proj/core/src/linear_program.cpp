#include "stablegenus/linear_program.hpp"

#include <optional>
#include <stdexcept>

namespace stablegenus {

namespace {

// Dense tableau: rows_ x (cols_ + 1), last column is the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_(rows, RationalVector(cols + 1, Rational(0))), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return rows_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational piv = t_[r][c];
    for (auto& x : t_[r]) x /= piv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  // Minimizes cost over the columns allowed[j]; returns false if unbounded.
  bool optimize(const RationalVector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      // Reduced costs: c_j - c_B B^{-1} A_j (the tableau already holds B^{-1} A).
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols_ && !entering; ++j) {
        if (!allowed[j]) continue;
        Rational rc = cost[j];
        for (std::size_t i = 0; i < rows_; ++i) rc -= cost[basis_[i]] * t_[i][j];
        if (rc < 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t c = *entering;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][c] <= 0) continue;
        const Rational ratio = t_[i][cols_] / t_[i][c];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, c);
    }
  }

  Rational objective(const RationalVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_; ++i) v += cost[basis_[i]] * t_[i][cols_];
    return v;
  }

  RationalVector solution(std::size_t n) const {
    RationalVector x(n, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < n) x[basis_[i]] = t_[i][cols_];
    return x;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RationalVector> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const Matrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) throw std::invalid_argument("solve_lp: shape mismatch");

  // Phase I: artificial column n + i for every row, rows sign-normalized so b >= 0.
  Tableau tab(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = sign * a(i, j);
    tab.at(i, n + i) = 1;
    tab.rhs(i) = sign * b[i];
    tab.basic(i) = n + i;
  }
  RationalVector phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  std::vector<bool> all(n + m, true);
  tab.optimize(phase1, all);
  if (tab.objective(phase1) != 0) return {LpStatus::infeasible, 0, {}};

  // Drive artificial variables out of the basis; rows where that is impossible are redundant.
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basic(i) < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j)
      if (tab.at(i, j) != 0) col = j;
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.drop_row(i);
    }
  }

  RationalVector cost(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  std::vector<bool> original(n + m, false);
  for (std::size_t j = 0; j < n; ++j) original[j] = true;
  if (!tab.optimize(cost, original)) return {LpStatus::unbounded, 0, {}};
  return {LpStatus::optimal, tab.objective(cost), tab.solution(n)};
}

}  // namespace stablegenus
