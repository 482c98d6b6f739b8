#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "stablegenus/casson_gordon.hpp"
#include "stablegenus/fekete.hpp"
#include "stablegenus/polytope.hpp"
#include "stablegenus/signatures.hpp"
#include "stablegenus/stable_bounds.hpp"

namespace stablegenus {

inline constexpr const char* kSchema = "stablegenus/1";

nlohmann::json rational_json(const Rational& q);
nlohmann::json vector_json(const RationalVector& v);
nlohmann::json basis_json(const std::vector<BasisKnot>& basis);

nlohmann::json to_json(const StepFunction& f);
nlohmann::json to_json(const Functional& f);
nlohmann::json to_json(const HPolytope& p);
nlohmann::json to_json(const VPolytope& v);
nlohmann::json to_json(const Fact& f);
nlohmann::json to_json(const BoundReport& r, const Registry& registry);
nlohmann::json to_json(const UnitBallReport& r);
nlohmann::json to_json(const CGCertificate& c);

/// Reads the output of to_json(CGCertificate). Throws InputError on malformed input.
CGCertificate certificate_from_json(const nlohmann::json& j);

/// Rows t_lo,t_hi,value with value = (1/2)|sigma_t| on each constant piece of (0, 1/2].
std::string segments_csv(const KnotExpr& expr, unsigned cap_bits = kDefaultPrecisionCapBits);

/// Reads "n value" pairs, one per line; '#' starts a comment. Throws InputError.
SubadditiveTable parse_table(const std::string& text);

}  // namespace stablegenus
