#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "stablegenus/knot_algebra.hpp"

namespace stablegenus {

/// Syntax or semantic error in a knot expression; offset is a 0-based character index.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses
///   expr     := ['+'|'-'] term (('+'|'-') term)*  |  '0'
///   term     := [rational '*'] knot
///   knot     := 'T(' int ',' int ')' | catalog-name
///   rational := int ['/' int]
/// Whitespace is ignored between tokens.
KnotExpr parse_expr(std::string_view text);

/// A single basis knot name: "T(p,q)", "-T(p,q)" (mirror) or a catalog name.
BasisKnot parse_basis_knot(std::string_view text);

/// Canonical text: terms in basis order, unit coefficients omitted, "0" for the zero class.
std::string to_text(const KnotExpr& e);

}  // namespace stablegenus
