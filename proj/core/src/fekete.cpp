#include "stablegenus/fekete.hpp"

#include <stdexcept>

namespace stablegenus {

void SubadditiveTable::set(long n, const Rational& value) {
  if (n < 1) throw std::invalid_argument("table index must be positive");
  if (value < 0) throw std::invalid_argument("table values must be nonnegative");
  values_[n] = value;
}

Rational fekete_upper(const SubadditiveTable& table) {
  if (table.empty()) throw std::invalid_argument("fekete_upper: empty table");
  Rational best = table.values().begin()->second / table.values().begin()->first;
  for (const auto& [n, f] : table.values()) best = std::min(best, Rational(f / n));
  return best;
}

Integer fekete_n0(long n, const Rational& b, const Rational& eps) {
  if (n < 1 || b < 0 || eps <= 0) throw std::invalid_argument("fekete_n0: need N >= 1, B >= 0, eps > 0");
  return ceil(2 * b / eps + n);
}

std::string SubadditivityViolation::to_string() const {
  const std::string rel = kind == Kind::sum ? "f(" + std::to_string(n) + "+" + std::to_string(m) + ")"
                                            : "f(" + std::to_string(n) + "*" + std::to_string(m) + ")";
  return rel + " = " + stablegenus::to_string(lhs) + " > " + stablegenus::to_string(rhs);
}

std::vector<SubadditivityViolation> audit_subadditive(const SubadditiveTable& table) {
  std::vector<SubadditivityViolation> out;
  const auto& v = table.values();
  for (const auto& [n, fn] : v) {
    for (const auto& [m, fm] : v) {
      if (n <= m) {
        if (auto it = v.find(n + m); it != v.end() && it->second > fn + fm)
          out.push_back({SubadditivityViolation::Kind::sum, n, m, it->second, fn + fm});
      }
      if (auto it = v.find(n * m); it != v.end() && it->second > n * fm)
        out.push_back({SubadditivityViolation::Kind::product, n, m, it->second, n * fm});
    }
  }
  return out;
}

}  // namespace stablegenus
