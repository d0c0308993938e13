#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "wallnorm/error.hpp"
#include "wallnorm/surface_map.hpp"

using namespace wallnorm;

namespace {

ErrorKind parse_error(const std::string& text) {
  try {
    parse_wall_system(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ErrorKind::MalformedInput;
}

void check_partition(int darts, const std::vector<std::vector<Dart>>& parts) {
  std::vector<int> hits(darts, 0);
  for (const auto& p : parts)
    for (const Dart d : p) ++hits[d];
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

void check_structure(const WallSystemMap& map) {
  CHECK(map.edge_count() == 2 * map.vertex_count());
  CHECK(map.euler_characteristic() == 2 - 2 * map.genus());
  for (Dart d = 0; d < map.dart_count(); ++d) {
    CHECK(map.alpha(map.alpha(d)) == d);
    CHECK(map.sigma(map.sigma(map.sigma(map.sigma(d)))) == d);
    CHECK(map.opposite(d) != d);
  }
  std::vector<std::vector<Dart>> faces, curves;
  for (const auto& f : map.faces()) faces.push_back(f.boundary);
  for (const auto& c : map.curves()) {
    curves.push_back(c.darts);
    curves.push_back(c.reverse);
    CHECK(c.dart_count() % 2 == 0);
  }
  check_partition(map.dart_count(), faces);
  check_partition(map.dart_count(), curves);
  const auto dual = map.dual_graph();
  CHECK(dual.connected());
  std::vector<std::vector<Dart>> link_darts;
  for (const auto& l : dual.links) link_darts.push_back({map.tail(l.edge), map.head(l.edge)});
  check_partition(map.dart_count(), link_darts);
}

}  // namespace

TEST_CASE("parse the smallest grid") {
  const auto map = parse_wall_system(
      "# G(1,1)\n"
      "vertices 1\n"
      "vertex 0: 0 1 2 3   # east north west south\n"
      "edge 0: 0 2\n"
      "edge 1: 1 3\n");
  CHECK(map.vertex_count() == 1);
  CHECK(map.edge_count() == 2);
  CHECK(map.serialize() == grid_wall_system(1, 1).serialize());
}

TEST_CASE("parse errors") {
  CHECK(parse_error("vertices 1\nvertex 0: 0 1 2\nedge 0: 0 2\nedge 1: 1 3\n") == ErrorKind::BadDegree);
  CHECK(parse_error("vertices 1\nvertex 0: 0 1 2 2\nedge 0: 0 2\nedge 1: 1 3\n") ==
        ErrorKind::DartMultiplicity);
  CHECK(parse_error("vertices 1\nvertex 0: 0 1 2 3\nedge 0: 0 2\nedge 1: 1 2\n") ==
        ErrorKind::DartMultiplicity);
  CHECK(parse_error("vertices 1\nvertex 0: 0 1 2 3\nedge 0: 0 2\n") == ErrorKind::MalformedInput);
  CHECK(parse_error("vertices x\n") == ErrorKind::MalformedInput);
  CHECK(parse_error("vertex 0: 0 1 2 3\n") == ErrorKind::MalformedInput);
  CHECK(parse_error("vertices 1\nvertex 0 0 1 2 3\nedge 0: 0 2\nedge 1: 1 3\n") ==
        ErrorKind::MalformedInput);
  CHECK(parse_error("vertices 0\n") == ErrorKind::MalformedInput);
  // Two disjoint G(1,1) copies: Euler characteristic 0 but two components.
  CHECK(parse_error("vertices 2\nvertex 0: 0 1 2 3\nvertex 1: 4 5 6 7\n"
                    "edge 0: 0 2\nedge 1: 1 3\nedge 2: 4 6\nedge 3: 5 7\n") == ErrorKind::BadEuler);
}

TEST_CASE("grid fixtures: faces, genus, curves, dual graph") {
  const auto g11 = grid_wall_system(1, 1);
  CHECK(g11.face_count() == 1);
  CHECK(g11.faces()[0].boundary.size() == 4);
  CHECK(g11.genus() == 1);
  CHECK(g11.curves().size() == 2);
  const auto d11 = g11.dual_graph();
  CHECK(d11.node_count == 1);
  CHECK(d11.links.size() == 2);
  CHECK(std::all_of(d11.links.begin(), d11.links.end(), [](const DualLink& l) { return l.from == l.to; }));

  const auto g22 = grid_wall_system(2, 2);
  CHECK(g22.vertex_count() == 4);
  CHECK(g22.edge_count() == 8);
  CHECK(g22.face_count() == 4);
  for (const auto& f : g22.faces()) CHECK(f.boundary.size() == 4);
  CHECK(g22.genus() == 1);
  CHECK(g22.curves().size() == 4);
  const auto d22 = g22.dual_graph();
  CHECK(d22.node_count == 4);
  CHECK(d22.links.size() == 8);
  for (const int deg : d22.degrees()) CHECK(deg == 4);
  CHECK(d22.connected());

  CHECK(grid_wall_system(3, 3).genus() == 1);
  // Grid cells: G(m,n) has mn faces and m+n curves.
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const auto g = grid_wall_system(m, n);
      CHECK(g.face_count() == m * n);
      CHECK(static_cast<int>(g.curves().size()) == m + n);
      check_structure(g);
    }
  }
  CHECK(grid_wall_system(2, 3).face_count() == 6);
}

TEST_CASE("figure eight on the sphere is one curve") {
  const auto map = testing::figure_eight();
  CHECK(map.genus() == 0);
  CHECK(map.face_count() == 3);
  REQUIRE(map.curves().size() == 1);
  CHECK(map.curves()[0].dart_count() == 4);
  // Explicit orbit trace: 0 -> sigma^2(alpha 0) = sigma^2(3) = 1 -> sigma^2(2) = 0.
  CHECK(map.curves()[0].darts == std::vector<Dart>{0, 1});
  check_structure(map);
}

TEST_CASE("random maps satisfy the structural invariants and round-trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int V = 1 + trial % 6;
    const auto map = random_wall_system(rng, V);
    check_structure(map);
    const auto again = parse_wall_system(map.serialize());
    CHECK(again.serialize() == map.serialize());
    CHECK(again.hash() == map.hash());
  }
}
