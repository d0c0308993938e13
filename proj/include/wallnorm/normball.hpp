#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "wallnorm/coorient.hpp"
#include "wallnorm/homology.hpp"
#include "wallnorm/numeric.hpp"
#include "wallnorm/surface_map.hpp"

namespace wallnorm {

/// Eulerian classes of (map, basis), enumerated once and cached by the
/// serialized map and basis. Throws ResourceLimit when the cap cuts the
/// enumeration short (incomplete sets are never cached).
std::shared_ptr<const EulerianSet> eulerian_classes(const WallSystemMap& map, const HomologyBasis& basis,
                                                    const EnumerationLimits& limits = {});
void clear_class_cache();

struct NormValue {
  std::int64_t value = 0;
  Coords witness;  // maximizing class, smallest lexicographic on ties
};

/// x(a) as the maximum of nu(a) over the Eulerian classes.
NormValue norm(const WallSystemMap& map, const HomologyBasis& basis, const Coords& a,
               const EnumerationLimits& limits = {});
NormValue norm_over(const std::vector<Coords>& points, const Coords& a);
Rational norm_rational(const WallSystemMap& map, const HomologyBasis& basis, const std::vector<Rational>& a,
                       const EnumerationLimits& limits = {});

enum class Membership { Outside, Boundary, Interior };
const char* membership_name(Membership m);

/// Convex hull of a finite symmetric point set in Z^d.
struct DualBall {
  int ambient = 0;            // d = 2g
  std::vector<Coords> points; // sorted, deduplicated
  std::vector<Coords> extreme;
  int dim = 0;                // affine dimension of the points
  std::vector<Coords> polygon;        // d = 2: extreme points counterclockwise
  std::optional<Rational> area;       // d = 2 only
};

DualBall dual_ball(const WallSystemMap& map, const HomologyBasis& basis, const EnumerationLimits& limits = {});
/// Builds the ball from explicit points. Throws DegenerateBall on an empty set.
DualBall dual_ball_from_points(std::vector<Coords> points, int ambient);

/// Exact membership: interior means some convex combination with every
/// coefficient positive exists. Throws DegenerateBall when dim < ambient.
Membership contains(const DualBall& ball, const Coords& p);

/// Number of facets, by testing hyperplanes through d affinely independent
/// extreme points. Throws ResourceLimit past `max_subsets` candidate sets.
std::int64_t facet_count(const DualBall& ball, std::int64_t max_subsets = 5'000'000);

/// Lattice points of the bounding box of the extreme points.
std::vector<Coords> bounding_box_points(const DualBall& ball);

}  // namespace wallnorm
