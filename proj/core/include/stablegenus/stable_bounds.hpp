#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stablegenus/knot_algebra.hpp"
#include "stablegenus/polytope.hpp"
#include "stablegenus/signatures.hpp"

namespace stablegenus {

enum class Category { smooth, topological };
const char* to_string(Category c);
/// "smooth" or "topological"; throws InputError otherwise.
Category parse_category(std::string_view text);

enum class FactKind { g4_exact, g4_upper };
const char* to_string(FactKind k);

/// A known 4-genus value (or upper bound) of an integer combination of basis knots.
struct Fact {
  std::vector<BasisKnot> basis;
  std::vector<Integer> coefficients;
  FactKind kind = FactKind::g4_exact;
  Rational value;
  std::string provenance;

  KnotExpr expr() const;
  bool is_slice() const { return value == 0; }
};

/// Validates a fact: matching lengths, nonzero combination, value >= 0, value 0 only
/// for g4_exact, nonempty provenance. Throws InputError.
Fact make_fact(std::vector<BasisKnot> basis, std::vector<Integer> coefficients, FactKind kind,
               Rational value, std::string provenance);

using Registry = std::vector<Fact>;

/// Reads {"schema": "stablegenus/1", "facts": [{basis, coefficients, kind, value, provenance}]}.
Registry parse_registry(std::string_view json_text);
Registry load_registry(const std::string& path);
/// The built-in facts.
const Registry& default_registry();

/// Signature interval functionals, plus tau and s/2 in the smooth category.
std::vector<Functional> category_functionals(const std::vector<BasisKnot>& basis, Category category,
                                             unsigned cap_bits = kDefaultPrecisionCapBits);

struct LowerBound {
  Rational value;
  std::vector<BasisKnot> basis;
  Functional witness;  // |witness(coordinates over basis)| == value
};

LowerBound lower_bound(const KnotExpr& expr, Category category, unsigned cap_bits = kDefaultPrecisionCapBits);

/// expr = sum weight_i * (v_i / g_i) + sum multiple_j * v_j, with slice facts j.
struct UpperCertificate {
  struct Point {
    std::size_t fact;
    Rational weight;  // signed; the gauge is the sum of |weight|
  };
  struct Line {
    std::size_t fact;
    Rational multiple;
  };
  std::vector<Point> points;
  std::vector<Line> lines;
};

struct UpperBound {
  std::optional<Rational> value;  // nullopt means +infinity
  UpperCertificate certificate;
};

UpperBound upper_bound(const KnotExpr& expr, const Registry& registry);
/// Rebuilds expr from the certificate and checks the claimed value.
bool verify_upper(const KnotExpr& expr, const UpperBound& ub, const Registry& registry);

struct BoundReport {
  KnotExpr expr;
  Category category = Category::topological;
  LowerBound lower;
  UpperBound upper;

  bool determined() const { return upper.value && *upper.value == lower.value; }
};

BoundReport g_st_interval(const KnotExpr& expr, Category category, const Registry& registry,
                          unsigned cap_bits = kDefaultPrecisionCapBits);
/// Re-checks both witnesses and lower <= upper.
bool verify(const BoundReport& report, const Registry& registry);

struct UnitBallReport {
  std::vector<BasisKnot> basis;
  Category category = Category::topological;
  std::vector<Functional> functionals;
  HPolytope outer{0};
  std::optional<VPolytope> outer_vertices;  // nullopt when the outer ball is unbounded
  std::string outer_note;
  VPolytope inner;                           // reduced hull of +-v/g over facts in the span
  std::vector<RationalVector> inner_lineality;  // slice directions
  bool sandwich = true;                      // inner ball inside outer ball
};

UnitBallReport unit_ball(const std::vector<BasisKnot>& basis, Category category, const Registry& registry,
                         unsigned cap_bits = kDefaultPrecisionCapBits);

}  // namespace stablegenus
