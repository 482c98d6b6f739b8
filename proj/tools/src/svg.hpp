#pragma once

#include <string>
#include <vector>

#include "stablegenus/knot_algebra.hpp"
#include "stablegenus/signatures.hpp"

namespace sgenus {

using stablegenus::RationalVector;

/// Graph of (1/2)|sigma_t| on [0, 1/2]. Every jump abscissa is emitted once as a
/// <line class="jump" data-t="..."> element.
std::string signature_svg(const stablegenus::KnotExpr& expr, const std::string& title,
                          unsigned cap_bits = stablegenus::kDefaultPrecisionCapBits);

struct PolygonLayer {
  std::string css_class;   // "outer", "smooth", "inner"
  std::vector<RationalVector> points;  // 2-dimensional
};

/// Plane drawing of symmetric convex bodies; points are sorted by angle before drawing.
std::string polygon_svg(const std::vector<PolygonLayer>& layers, const std::string& x_label,
                        const std::string& y_label, const std::string& title);

/// Exact angular order around the origin, starting from the positive x-axis.
std::vector<RationalVector> angular_sort(std::vector<RationalVector> pts);

}  // namespace sgenus
