#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wallnorm/homology.hpp"
#include "wallnorm/numeric.hpp"
#include "wallnorm/surface_map.hpp"

namespace wallnorm {

/// Sign per wall edge: +1 crosses the edge right face -> left face (the
/// reference coorientation), -1 the other way.
struct Coorientation {
  std::vector<std::int8_t> signs;

  int size() const { return static_cast<int>(signs.size()); }
  Coorientation negated() const;
  auto operator<=>(const Coorientation&) const = default;
};

enum class VertexType { Alternating, Transparent, NotEulerian };

bool is_eulerian(const WallSystemMap& map, const Coorientation& coor);
VertexType vertex_type(const WallSystemMap& map, const Coorientation& coor, int vertex);

/// Signed crossing count of a closed dual walk. Throws OpenWalk.
std::int64_t evaluate(const WallSystemMap& map, const Coorientation& coor, const DualWalk& walk);

/// Cohomology class (values on the basis cycles). Throws NotEulerian.
Coords class_of(const WallSystemMap& map, const Coorientation& coor, const HomologyBasis& basis);

struct EnumerationLimits {
  std::uint64_t max_count = 1'000'000;
};

/// Result of enumerating Eulerian coorientations. `complete` is false when the
/// count cap stopped the search; operations needing the full set reject it.
struct EulerianSet {
  std::uint64_t count = 0;
  bool complete = true;
  std::map<Coords, std::uint64_t> classes;  // class -> multiplicity
  std::vector<Coorientation> items;         // only when requested

  /// Throws ResourceLimit when the enumeration was cut short.
  void require_complete() const;
};

struct EnumerationOptions {
  EnumerationLimits limits;
  bool keep_items = false;
  /// Streaming consumer; called in enumeration order.
  std::function<void(const Coorientation&)> visit;
};

/// Backtracking over edges in index order, + before -, pruning on per-vertex
/// partial sums. Output order is lexicographic in edge index.
EulerianSet enumerate_eulerian(const WallSystemMap& map, const HomologyBasis& basis,
                               const EnumerationOptions& options = {});

/// Faces 2-coloured by dual-graph distance parity from face 0 (even = white);
/// every edge is cooriented toward its white side. Throws NotBipartite.
Coorientation checkerboard_coorientation(const WallSystemMap& map);

/// The 2^c coorientations constant along each curve; bit i of the index
/// reverses curve i.
std::vector<Coorientation> brunella_coorientations(const WallSystemMap& map);

/// Coorientation file: "edge <j>: +" / "edge <j>: -".
std::string serialize_coorientation(const Coorientation& coor);
Coorientation parse_coorientation(std::string_view text, int edge_count);

}  // namespace wallnorm
