#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace wallnorm {

using Dart = int;

/// Boundary of a complementary disc: one orbit of the face permutation.
struct Face {
  std::vector<Dart> boundary;
};

/// One unoriented constituent curve of the wall system. `darts` is the
/// straight-ahead orbit of the smallest dart on the curve; `reverse` holds the
/// orbit of the opposite traversal.
struct Curve {
  std::vector<Dart> darts;
  std::vector<Dart> reverse;

  std::size_t dart_count() const { return darts.size() + reverse.size(); }
};

struct DualLink {
  int edge;
  int from;  // right face of the edge (reference crossing starts here)
  int to;    // left face of the edge
};

/// Faces as nodes, one link per wall edge directed right face -> left face.
struct DualGraph {
  int node_count = 0;
  std::vector<DualLink> links;

  std::vector<int> degrees() const;
  bool connected() const;
};

/// A 4-valent wall system filling a closed oriented surface, given as a
/// combinatorial map. Darts are 0..4V-1; each vertex lists its four darts
/// counterclockwise and each edge pairs a tail dart with a head dart.
///
/// Conventions: sigma(d) is the next dart counterclockwise at the vertex of d,
/// alpha(d) the other dart of its edge. Faces are the orbits of
/// phi = sigma o alpha. Traversing dart d from its vertex, the face containing
/// d lies on the right, so the face of the tail dart is the right face of the
/// edge and the face of the head dart is its left face.
///
/// Immutable after construction.
class WallSystemMap {
 public:
  /// Validates and builds the map; throws wallnorm::Error on bad input.
  WallSystemMap(std::vector<std::array<Dart, 4>> rotations,
                std::vector<std::array<Dart, 2>> edges);

  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 4 * vertex_count(); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }
  int genus() const { return (2 - euler_characteristic()) / 2; }

  const std::array<Dart, 4>& rotation(int vertex) const { return rotations_[vertex]; }
  const std::array<Dart, 2>& edge(int e) const { return edges_[e]; }
  Dart tail(int e) const { return edges_[e][0]; }
  Dart head(int e) const { return edges_[e][1]; }

  int vertex_of(Dart d) const { return dart_vertex_[d]; }
  int edge_of(Dart d) const { return dart_edge_[d]; }
  bool is_tail(Dart d) const { return edges_[dart_edge_[d]][0] == d; }
  /// +1 for tail darts, -1 for head darts.
  int kappa(Dart d) const { return is_tail(d) ? 1 : -1; }

  Dart sigma(Dart d) const;
  Dart alpha(Dart d) const;
  Dart opposite(Dart d) const { return sigma(sigma(d)); }
  Dart phi(Dart d) const { return sigma(alpha(d)); }
  Dart straight_ahead(Dart d) const { return opposite(alpha(d)); }

  const std::vector<Face>& faces() const { return faces_; }
  int face_of(Dart d) const { return dart_face_[d]; }
  int face_right(int e) const { return dart_face_[tail(e)]; }
  int face_left(int e) const { return dart_face_[head(e)]; }

  const std::vector<Curve>& curves() const { return curves_; }
  DualGraph dual_graph() const;

  /// Canonical text form; parse_wall_system(serialize()) reproduces the map.
  std::string serialize() const;
  /// FNV-1a hash of the canonical serialization, as 16 hex digits.
  std::string hash() const;

 private:
  std::vector<std::array<Dart, 4>> rotations_;
  std::vector<std::array<Dart, 2>> edges_;
  std::vector<int> dart_vertex_;
  std::vector<int> dart_position_;
  std::vector<int> dart_edge_;
  std::vector<int> dart_face_;
  std::vector<Face> faces_;
  std::vector<Curve> curves_;
};

WallSystemMap parse_wall_system(std::string_view text);
WallSystemMap load_wall_system(const std::string& path);

/// Torus grid G(m,n): m horizontal and n vertical circles, m,n >= 1.
/// Vertex (i,j) has id i*n+j and darts east, north, west, south = 4v..4v+3;
/// edge 2v leaves v eastward, edge 2v+1 leaves v northward.
WallSystemMap grid_wall_system(int m, int n);

/// Uniformly random dart pairing on V vertices; retried until connected.
WallSystemMap random_wall_system(std::mt19937_64& rng, int vertex_count);

}  // namespace wallnorm
