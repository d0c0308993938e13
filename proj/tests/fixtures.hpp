#pragma once

#include <string>

#include "wallnorm/homology.hpp"
#include "wallnorm/surface_map.hpp"

namespace wallnorm::testing {

// Figure-eight on the sphere: one vertex, a single curve crossing itself once.
inline WallSystemMap figure_eight() {
  return parse_wall_system(
      "vertices 1\n"
      "vertex 0: 0 1 2 3\n"
      "edge 0: 0 3\n"
      "edge 1: 1 2\n");
}

// Grid fixture with its standard basis installed.
struct GridFixture {
  WallSystemMap map;
  HomologyBasis basis;
};

inline GridFixture grid(int m, int n) {
  WallSystemMap map = grid_wall_system(m, n);
  HomologyBasis computed = homology_basis(map);
  HomologyBasis basis = set_user_basis(map, grid_basis_walks(m, n), computed, "grid");
  return {std::move(map), std::move(basis)};
}

}  // namespace wallnorm::testing

#include <deque>
#include <random>

namespace wallnorm::testing {

// Shortest dual path between two faces (BFS over links in index order).
inline DualWalk dual_path(const WallSystemMap& map, int from, int to) {
  std::vector<int> prev(map.face_count(), -2);
  std::vector<Crossing> via(map.face_count(), Crossing{-1, 0});
  std::deque<int> q{from};
  prev[from] = -1;
  while (!q.empty()) {
    const int f = q.front();
    q.pop_front();
    for (int e = 0; e < map.edge_count(); ++e) {
      for (const int dir : {1, -1}) {
        const Crossing c{e, dir};
        if (crossing_source(map, c) != f) continue;
        const int g = crossing_target(map, c);
        if (prev[g] != -2) continue;
        prev[g] = f;
        via[g] = c;
        q.push_back(g);
      }
    }
  }
  DualWalk w;
  for (int f = to; f != from; f = prev[f]) w.push_back(via[f]);
  return DualWalk(w.rbegin(), w.rend());
}

// Counterclockwise loop around a double point, starting in the face of its first dart.
inline DualWalk vertex_loop(const WallSystemMap& map, int v) {
  DualWalk w;
  for (const Dart d : map.rotation(v)) w.push_back({map.edge_of(d), map.kappa(d)});
  return w;
}

inline DualWalk random_closed_walk(const WallSystemMap& map, std::mt19937_64& rng, int steps) {
  std::uniform_int_distribution<int> pick_face(0, map.face_count() - 1);
  const int start = pick_face(rng);
  DualWalk w;
  int at = start;
  for (int i = 0; i < steps; ++i) {
    std::vector<Crossing> out;
    for (int e = 0; e < map.edge_count(); ++e)
      for (const int dir : {1, -1})
        if (crossing_source(map, {e, dir}) == at) out.push_back({e, dir});
    const Crossing c = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
    w.push_back(c);
    at = crossing_target(map, c);
  }
  const auto back = dual_path(map, at, start);
  w.insert(w.end(), back.begin(), back.end());
  return w;
}

// Homologous variant of a closed walk: splices in a conjugated vertex loop and
// a back-and-forth crossing, then rotates the result.
inline DualWalk homologous_variant(const WallSystemMap& map, const DualWalk& walk, std::mt19937_64& rng) {
  if (walk.empty()) return walk;
  std::uniform_int_distribution<std::size_t> pos(0, walk.size() - 1);
  std::uniform_int_distribution<int> pick_vertex(0, map.vertex_count() - 1);
  DualWalk out = walk;
  for (int round = 0; round < 2; ++round) {
    const std::size_t at = pos(rng) % out.size();
    const int face = crossing_source(map, out[at]);
    const int v = pick_vertex(rng);
    DualWalk loop = vertex_loop(map, v);
    if (rng() % 2) loop = reversed(loop);
    const int loop_face = crossing_source(map, loop.front());
    DualWalk detour = dual_path(map, face, loop_face);
    const DualWalk back = reversed(detour);
    detour.insert(detour.end(), loop.begin(), loop.end());
    detour.insert(detour.end(), back.begin(), back.end());
    // back-and-forth across the first link leaving `face`
    for (int e = 0; e < map.edge_count(); ++e) {
      if (map.face_right(e) == face || map.face_left(e) == face) {
        const int dir = map.face_right(e) == face ? 1 : -1;
        detour.push_back({e, dir});
        detour.push_back({e, -dir});
        break;
      }
    }
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(at), detour.begin(), detour.end());
  }
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(pos(rng) % out.size()), out.end());
  return out;
}

}  // namespace wallnorm::testing

#include "wallnorm/error.hpp"

namespace wallnorm::testing {

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected a wallnorm error");
}

// Random maps with genus >= min_genus and at most max_vertices double points.
inline std::vector<WallSystemMap> random_maps(std::mt19937_64& rng, int count, int max_vertices, int min_genus = 1) {
  std::vector<WallSystemMap> out;
  std::uniform_int_distribution<int> pick(1, max_vertices);
  while (static_cast<int>(out.size()) < count) {
    auto map = random_wall_system(rng, pick(rng));
    if (map.genus() >= min_genus) out.push_back(std::move(map));
  }
  return out;
}

}  // namespace wallnorm::testing
