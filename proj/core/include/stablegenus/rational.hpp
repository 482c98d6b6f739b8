#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stablegenus {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Raised for malformed user input: bad rationals, bad knot names, parse errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a certified computation cannot finish within its precision cap.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical text form: "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "a", "-a", "a/b" (surrounding whitespace allowed). Throws InputError.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms. Throws std::invalid_argument for den == 0.
Rational ratio(long num, long den);

Rational abs(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

bool is_integer(const Rational& q);

// Dot product of equal-length vectors.
Rational dot(const RationalVector& a, const RationalVector& b);

std::string to_string(const RationalVector& v);

}  // namespace stablegenus
