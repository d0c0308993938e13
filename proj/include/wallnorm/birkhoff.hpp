#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wallnorm/coorient.hpp"
#include "wallnorm/homology.hpp"
#include "wallnorm/normball.hpp"
#include "wallnorm/surface_map.hpp"

namespace wallnorm {

/// Topology of the surface attached to a congruent point: Euler
/// characteristic -2V, 2c boundary circles, genus 1 + V - c.
struct SectionInvariants {
  std::int64_t euler_characteristic = 0;
  std::int64_t boundary_circles = 0;
  std::int64_t genus = 0;
};

SectionInvariants section_invariants(const WallSystemMap& map);

struct SectionClass {
  Coords point;
  Membership status = Membership::Outside;
};

struct ClassificationReport {
  std::string map_hash;
  std::string basis_name;
  DualBall ball;
  Coords parity;
  SectionInvariants invariants;
  std::vector<SectionClass> points;  // congruent lattice points of the bounding box, lexicographic
  std::int64_t interior = 0;
  std::int64_t boundary = 0;
  std::int64_t outside = 0;

  /// A negative Birkhoff cross section exists iff some congruent point is interior.
  bool section_exists() const { return interior > 0; }
};

ClassificationReport classify(const WallSystemMap& map, const HomologyBasis& basis,
                              const EnumerationLimits& limits = {});

/// Line-oriented report: one "point=... status=... chi=... boundary=...
/// genus=..." record per point, then the counts and "sections: N".
std::string format_classification(const ClassificationReport& report);

/// Plot of a genus-one ball: polygon, origin, congruent points coloured by
/// status, 32 pixels per lattice unit. Throws WrongGenus unless the ball
/// lives in R^2, DegenerateBall when it has no polygon.
std::string render_svg(const DualBall& ball, const std::vector<SectionClass>& points);

}  // namespace wallnorm
