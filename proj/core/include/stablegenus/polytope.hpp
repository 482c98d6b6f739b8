#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "stablegenus/rational.hpp"
#include "stablegenus/signatures.hpp"

namespace stablegenus {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symmetric slab {x : |normal . x| <= bound}. The normal is a primitive integer
/// vector whose first nonzero entry is positive.
struct Halfspace {
  RationalVector normal;
  Rational bound;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Canonicalizes |normal . x| <= bound. Throws std::invalid_argument if normal is zero
/// or bound is not positive.
Halfspace make_halfspace(const RationalVector& normal, const Rational& bound);

/// Intersection of symmetric slabs; centrally symmetric by construction.
class HPolytope {
 public:
  explicit HPolytope(std::size_t dimension) : dimension_(dimension) {}
  HPolytope(std::size_t dimension, const std::vector<Halfspace>& hs);

  /// Adds a slab; parallel slabs are merged keeping the tighter bound.
  void add(const Halfspace& h);
  std::size_t dimension() const { return dimension_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

 private:
  std::size_t dimension_;
  std::vector<Halfspace> halfspaces_;
};

/// {x : |f(x)| <= bound for every functional f}.
HPolytope from_functionals(const std::vector<Functional>& fs, std::size_t dimension, const Rational& bound = 1);

struct VPolytope {
  std::size_t dimension = 0;
  std::vector<RationalVector> vertices;  // lexicographically sorted, no duplicates
};

/// Exact extreme points by solving every d-subset of slab boundaries.
/// Throws GeometryError("unbounded") when the normals do not span the space.
VPolytope vertices(const HPolytope& p);

enum class Position { interior, boundary, outside };
const char* to_string(Position p);

Position contains(const HPolytope& p, const RationalVector& x);
/// True iff x lies in P and the normals of the active slabs span the space.
bool is_vertex(const HPolytope& p, const RationalVector& x);

/// max_f |f(x)|, 0 for an empty family.
Rational gauge_outer(const RationalVector& x, const std::vector<Functional>& fs);

/// Convex-combination witness for a Minkowski gauge value.
struct GaugeCertificate {
  Rational value;
  RationalVector weights;    // one per vertex, >= 0, summing to value
  RationalVector lineality;  // free coefficient per lineality direction
};

/// inf{lambda >= 0 : x in lambda conv(V) + span(lineality)}; nullopt means +infinity.
std::optional<GaugeCertificate> gauge_inner_certificate(const RationalVector& x, const VPolytope& v,
                                                        const std::vector<RationalVector>& lineality = {});
std::optional<Rational> gauge_inner(const RationalVector& x, const VPolytope& v);

/// Drops points that are convex combinations of the others.
VPolytope reduce(const VPolytope& v);

}  // namespace stablegenus
