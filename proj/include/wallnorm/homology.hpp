#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wallnorm/numeric.hpp"
#include "wallnorm/surface_map.hpp"

namespace wallnorm {

/// One traversal of a dual link. direction = +1 crosses the wall edge from its
/// right face to its left face (the reference direction), -1 the other way.
struct Crossing {
  int link;
  int direction;

  bool operator==(const Crossing&) const = default;
};

/// A walk in the dual graph, i.e. a path transverse to the wall system.
using DualWalk = std::vector<Crossing>;

int crossing_source(const WallSystemMap& map, const Crossing& c);
int crossing_target(const WallSystemMap& map, const Crossing& c);
/// Empty walks count as closed.
bool is_closed(const WallSystemMap& map, const DualWalk& walk);
DualWalk reversed(const DualWalk& walk);

/// Cellular chain complex of the dual CW structure: faces, wall edges, and
/// one 2-cell per double point.
struct BoundaryMatrices {
  IndexMatrix d1;  // faces x edges: +1 at the left face, -1 at the right face
  IndexMatrix d2;  // edges x vertices: kappa(d) summed over the darts at v
};

BoundaryMatrices boundary_matrices(const WallSystemMap& map);

/// Basis b_1..b_2g of H_1 as closed dual walks together with dual cocycles:
/// cocycles(i, e) is the weight of link e, and w_i(b_j) = delta_ij.
struct HomologyBasis {
  std::string name;  // echoed in report headers
  std::vector<DualWalk> cycles;
  IndexMatrix cocycles;  // rank x edges

  int rank() const { return static_cast<int>(cycles.size()); }
  /// Column of cocycle weights carried by one link.
  Coords link_weight(int link) const;
};

/// H_1 basis from the dual graph. A Kruskal spanning tree (links in index
/// order) and the Smith form of the face relations give a first basis; it is
/// then replaced by shortest closed dual walks chosen greedily by
/// (length, coordinates) whenever those extend to a basis. Deterministic.
HomologyBasis homology_basis(const WallSystemMap& map);

/// The Smith-form basis before shortest-walk reduction.
HomologyBasis smith_basis(const WallSystemMap& map);

/// Coordinates (w_1(walk), ..., w_2g(walk)). Throws OpenWalk.
Coords class_of_walk(const WallSystemMap& map, const DualWalk& walk, const HomologyBasis& basis);

/// [gamma]_2: crossing count of each basis cycle mod 2.
Coords gamma_parity(const HomologyBasis& basis);

/// Adopts the given walks as the basis if their class matrix relative to
/// `reference` is unimodular; throws NotABasis otherwise.
HomologyBasis set_user_basis(const WallSystemMap& map, const std::vector<DualWalk>& walks,
                             const HomologyBasis& reference, std::string name = "user");

/// Column j holds the coordinates, in `from`, of the j-th cycle of `to`.
IndexMatrix change_of_basis(const WallSystemMap& map, const HomologyBasis& from,
                            const HomologyBasis& to);

/// Standard torus-grid walks for grid_wall_system(m, n): the first crosses the
/// n vertical circles once each, the second the m horizontal circles.
std::vector<DualWalk> grid_basis_walks(int m, int n);

/// Basis file: lines "cycle <i>: <link><+|-> ...".
std::vector<DualWalk> parse_basis_walks(std::string_view text);
std::vector<DualWalk> load_basis_walks(const std::string& path);
std::string serialize_basis_walks(const std::vector<DualWalk>& walks);
std::string format_walk(const DualWalk& walk);

}  // namespace wallnorm
