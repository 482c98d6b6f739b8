#pragma once

#include <map>
#include <string>
#include <vector>

#include "stablegenus/rational.hpp"

namespace stablegenus {

/// Finitely many values n -> f(n) of a nonnegative sequence, n >= 1.
class SubadditiveTable {
 public:
  SubadditiveTable() = default;
  void set(long n, const Rational& value);
  const std::map<long, Rational>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

 private:
  std::map<long, Rational> values_;
};

/// min over stored n of f(n)/n. Throws std::invalid_argument on an empty table.
Rational fekete_upper(const SubadditiveTable& table);

/// Smallest integer >= 2B/eps + N.
Integer fekete_n0(long n, const Rational& b, const Rational& eps);

struct SubadditivityViolation {
  enum class Kind { sum, product } kind;
  long n = 0;
  long m = 0;
  Rational lhs;  // f(n+m) or f(nm)
  Rational rhs;  // f(n)+f(m) or n*f(m)
  std::string to_string() const;
};

/// Every stored pair with f(n+m) > f(n)+f(m) or f(nm) > n f(m).
std::vector<SubadditivityViolation> audit_subadditive(const SubadditiveTable& table);

}  // namespace stablegenus
