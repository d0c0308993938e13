#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wallnorm/coorient.hpp"
#include "wallnorm/cover.hpp"
#include "wallnorm/homology.hpp"
#include "wallnorm/numeric.hpp"
#include "wallnorm/surface_map.hpp"

namespace wallnorm {

/// Values n.h on the deck orbit of the base face (face 0), for |h|_inf <= radius.
struct SeedField {
  Coords n;
  CoverBox cells;  // one face; indexes h
  std::vector<std::int64_t> values;
};

SeedField seed_values(const HomologyBasis& basis, const Coords& n, int radius);

/// Integer function on the states of a cover box.
struct EikonalField {
  CoverBox box;
  std::vector<std::int64_t> values;  // INT64_MAX where no seed is reachable

  std::int64_t at(int face, const Coords& h) const { return values[box.index(face, h)]; }
  /// Radius of the region where truncation is assumed not to matter.
  int safe_radius() const { return box.radius() / 2; }
};

/// Highest extension: min over seeds y of f(y) + d(x, y), distances in the box.
EikonalField extend_highest(const WallSystemMap& map, const HomologyBasis& basis, const SeedField& seed);

/// Adjacent states with |h|_inf <= region whose values do not differ by exactly 1.
std::int64_t eikonal_violations(const WallSystemMap& map, const HomologyBasis& basis, const EikonalField& field,
                                 int region);
/// Pairs (x, x + u) with |h|_inf <= region where f(x + u) - f(x) != n.u.
std::int64_t equivariance_violations(const EikonalField& field, const Coords& n, int region);

/// Sign across each wall edge at its lift leaving (face_right(e), 0); 0 when
/// the values there do not differ by exactly 1.
std::vector<int> read_signs(const WallSystemMap& map, const HomologyBasis& basis, const EikonalField& field);

enum class RealizeMethod { Eikonal, Lookup, Auto };
enum class RealizedBy { Eikonal, EnumerationFallback, Lookup };
const char* realized_by_name(RealizedBy m);

struct RealizeOptions {
  RealizeMethod method = RealizeMethod::Auto;
  int max_radius = 16;  // interior targets; boundary targets get four times this
  std::int64_t max_states = 20'000'000;
  EnumerationLimits limits;
};

struct RealizationResult {
  Coorientation coorientation;
  Coords target;
  RealizedBy method = RealizedBy::Eikonal;
  int radius = 0;  // eikonal radius used; 0 for lookups
};

/// An Eulerian coorientation of class n. Throws NotRealizable (message starts
/// with "parity" or "outside-ball") or ResourceLimit.
RealizationResult realize(const WallSystemMap& map, const HomologyBasis& basis, const Coords& n,
                          const RealizeOptions& options = {});

}  // namespace wallnorm
