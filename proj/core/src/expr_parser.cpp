#include "stablegenus/expr_parser.hpp"

#include <cctype>
#include <optional>

namespace stablegenus {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : InputError(message + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  KnotExpr expr() {
    skip_ws();
    if (peek() == '0') {
      // "0" alone denotes the zero class; "0*..." is an ordinary coefficient.
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return {};
      pos_ = save;
    }
    KnotExpr out;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
    }
    out = out + term(sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      out = out + term(c == '-' ? -1 : 1);
    }
    return out;
  }

  BasisKnot lone_knot() {
    skip_ws();
    bool mirrored = false;
    if (peek() == '-') {
      mirrored = true;
      ++pos_;
      skip_ws();
    }
    BasisKnot k = knot();
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    if (mirrored) {
      if (!k.is_torus()) fail("only torus knots carry a mirror prefix in basis names");
      TorusKnot t = k.torus();
      t.mirrored = true;
      return BasisKnot(t);
    }
    return k;
  }

 private:
  KnotExpr term(int sign) {
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek())) && !looks_like_catalog()) {
      coeff = rational();
      skip_ws();
      expect('*');
      skip_ws();
    }
    return KnotExpr(knot(), sign * coeff);
  }

  // A catalog name such as 3_1 also starts with a digit.
  bool looks_like_catalog() const {
    std::size_t p = pos_;
    while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
    return p < s_.size() && s_[p] == '_';
  }

  BasisKnot knot() {
    const std::size_t start = pos_;
    if (peek() == 'T') {
      ++pos_;
      skip_ws();
      expect('(');
      skip_ws();
      const long p = integer();
      skip_ws();
      expect(',');
      skip_ws();
      const long q = integer();
      skip_ws();
      expect(')');
      try {
        return torus(static_cast<int>(p), static_cast<int>(q));
      } catch (const InputError& e) {
        throw ParseError(e.what(), start);
      }
    }
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += s_[pos_++];
    if (name.empty()) fail("expected a knot");
    try {
      return catalog(name);
    } catch (const InputError& e) {
      throw ParseError(e.what(), start);
    }
  }

  Rational rational() {
    const std::size_t start = pos_;
    const long num = integer();
    (void)num;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const long den = integer();
      if (den == 0) throw ParseError("zero denominator", start);
    }
    std::string text(s_.substr(start, pos_ - start));
    std::erase_if(text, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    return parse_rational(text);
  }

  long integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) throw ParseError("integer too large", start);
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

KnotExpr parse_expr(std::string_view text) { return Parser(text).expr(); }

BasisKnot parse_basis_knot(std::string_view text) { return Parser(text).lone_knot(); }

std::string to_text(const KnotExpr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [knot, c] : e.terms()) {
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += knot.name();
  }
  return out;
}

}  // namespace stablegenus
