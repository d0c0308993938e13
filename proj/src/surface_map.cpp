#include "wallnorm/surface_map.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "wallnorm/error.hpp"

namespace wallnorm {

namespace {

std::vector<std::vector<Dart>> orbits(int n, auto&& next) {
  std::vector<std::vector<Dart>> out;
  std::vector<char> seen(n, 0);
  for (Dart d = 0; d < n; ++d) {
    if (seen[d]) continue;
    std::vector<Dart> orbit;
    for (Dart x = d; !seen[x]; x = next(x)) {
      seen[x] = 1;
      orbit.push_back(x);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<int> DualGraph::degrees() const {
  std::vector<int> deg(node_count, 0);
  for (const auto& l : links) {
    ++deg[l.from];
    ++deg[l.to];
  }
  return deg;
}

bool DualGraph::connected() const {
  if (node_count == 0) return true;
  UnionFind uf(node_count);
  int components = node_count;
  for (const auto& l : links) components -= uf.unite(l.from, l.to) ? 1 : 0;
  return components == 1;
}

WallSystemMap::WallSystemMap(std::vector<std::array<Dart, 4>> rotations,
                             std::vector<std::array<Dart, 2>> edges)
    : rotations_(std::move(rotations)), edges_(std::move(edges)) {
  const int V = vertex_count();
  if (V < 1) throw Error(ErrorKind::MalformedInput, "a wall system needs at least one vertex");
  if (edge_count() != 2 * V) {
    throw Error(ErrorKind::MalformedInput, "expected " + std::to_string(2 * V) + " edges, got " +
                                               std::to_string(edge_count()));
  }
  const int n = dart_count();
  dart_vertex_.assign(n, -1);
  dart_position_.assign(n, -1);
  dart_edge_.assign(n, -1);
  for (int v = 0; v < V; ++v) {
    for (int k = 0; k < 4; ++k) {
      const Dart d = rotations_[v][k];
      if (d < 0 || d >= n) {
        throw Error(ErrorKind::DartMultiplicity, "dart " + std::to_string(d) + " out of range");
      }
      if (dart_vertex_[d] != -1) {
        throw Error(ErrorKind::DartMultiplicity,
                    "dart " + std::to_string(d) + " appears in two vertex rotations");
      }
      dart_vertex_[d] = v;
      dart_position_[d] = k;
    }
  }
  for (int e = 0; e < edge_count(); ++e) {
    for (const Dart d : edges_[e]) {
      if (d < 0 || d >= n) {
        throw Error(ErrorKind::DartMultiplicity, "dart " + std::to_string(d) + " out of range");
      }
      if (dart_edge_[d] != -1) {
        throw Error(ErrorKind::DartMultiplicity,
                    "dart " + std::to_string(d) + " appears in two edges");
      }
      dart_edge_[d] = e;
    }
  }
  // Counting forces both partitions to be complete: 4V distinct darts in each.

  for (auto& orbit : orbits(n, [this](Dart d) { return phi(d); })) {
    faces_.push_back(Face{std::move(orbit)});
  }
  dart_face_.assign(n, -1);
  for (int f = 0; f < face_count(); ++f) {
    for (const Dart d : faces_[f].boundary) dart_face_[d] = f;
  }

  UnionFind uf(V);
  int components = V;
  for (const auto& e : edges_) components -= uf.unite(dart_vertex_[e[0]], dart_vertex_[e[1]]) ? 1 : 0;
  const int chi = euler_characteristic();
  if (components != 1) {
    throw Error(ErrorKind::BadEuler, "map is disconnected (" + std::to_string(components) +
                                         " components, chi = " + std::to_string(chi) + ")");
  }
  if (chi % 2 != 0 || chi > 2) {
    throw Error(ErrorKind::BadEuler, "Euler characteristic " + std::to_string(chi) +
                                         " is not that of a closed orientable surface");
  }

  // Straight-ahead orbits come in reversal pairs: the reversal of the orbit of d
  // is the orbit of alpha(d).
  const auto walks = orbits(n, [this](Dart d) { return straight_ahead(d); });
  std::vector<int> orbit_of(n, -1);
  for (int i = 0; i < static_cast<int>(walks.size()); ++i) {
    for (const Dart d : walks[i]) orbit_of[d] = i;
  }
  std::vector<char> used(walks.size(), 0);
  for (int i = 0; i < static_cast<int>(walks.size()); ++i) {
    if (used[i]) continue;
    used[i] = 1;
    Curve c;
    c.darts = walks[i];
    const int j = orbit_of[alpha(walks[i].front())];
    if (j != i) {
      used[j] = 1;
      c.reverse = walks[j];
    }
    curves_.push_back(std::move(c));
  }
}

Dart WallSystemMap::sigma(Dart d) const {
  return rotations_[dart_vertex_[d]][(dart_position_[d] + 1) % 4];
}

Dart WallSystemMap::alpha(Dart d) const {
  const auto& e = edges_[dart_edge_[d]];
  return e[0] == d ? e[1] : e[0];
}

DualGraph WallSystemMap::dual_graph() const {
  DualGraph g;
  g.node_count = face_count();
  g.links.reserve(edge_count());
  for (int e = 0; e < edge_count(); ++e) g.links.push_back({e, face_right(e), face_left(e)});
  return g;
}

std::string WallSystemMap::serialize() const {
  std::ostringstream os;
  os << "vertices " << vertex_count() << '\n';
  for (int v = 0; v < vertex_count(); ++v) {
    const auto& r = rotations_[v];
    os << "vertex " << v << ": " << r[0] << ' ' << r[1] << ' ' << r[2] << ' ' << r[3] << '\n';
  }
  for (int e = 0; e < edge_count(); ++e) {
    os << "edge " << e << ": " << edges_[e][0] << ' ' << edges_[e][1] << '\n';
  }
  return os.str();
}

std::string WallSystemMap::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char ch : serialize()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

[[noreturn]] void malformed(int line, const std::string& what) {
  throw Error(ErrorKind::MalformedInput, "line " + std::to_string(line) + ": " + what);
}

// Parses "<keyword> <index>:" and returns the index.
int parse_indexed_header(std::istringstream& in, int line) {
  std::string token;
  if (!(in >> token) || token.empty() || token.back() != ':') malformed(line, "expected '<index>:'");
  token.pop_back();
  try {
    std::size_t used = 0;
    const int idx = std::stoi(token, &used);
    if (used != token.size() || idx < 0) malformed(line, "bad index '" + token + "'");
    return idx;
  } catch (const std::logic_error&) {
    malformed(line, "bad index '" + token + "'");
  }
}

std::vector<int> parse_ints(std::istringstream& in, int line) {
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const int x = std::stoi(token, &used);
      if (used != token.size()) malformed(line, "bad integer '" + token + "'");
      out.push_back(x);
    } catch (const std::logic_error&) {
      malformed(line, "bad integer '" + token + "'");
    }
  }
  return out;
}

}  // namespace

WallSystemMap parse_wall_system(std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::optional<int> vertex_total;
  std::map<int, std::vector<int>> vertex_lines;
  std::map<int, std::vector<int>> edge_lines;
  std::string raw;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream in(raw);
    std::string keyword;
    if (!(in >> keyword)) continue;
    if (keyword == "vertices") {
      const auto v = parse_ints(in, line);
      if (v.size() != 1 || v[0] < 0) malformed(line, "expected 'vertices <V>'");
      if (vertex_total) malformed(line, "duplicate 'vertices' line");
      vertex_total = v[0];
    } else if (keyword == "vertex") {
      const int idx = parse_indexed_header(in, line);
      if (vertex_lines.count(idx)) malformed(line, "duplicate vertex " + std::to_string(idx));
      vertex_lines[idx] = parse_ints(in, line);
    } else if (keyword == "edge") {
      const int idx = parse_indexed_header(in, line);
      if (edge_lines.count(idx)) malformed(line, "duplicate edge " + std::to_string(idx));
      edge_lines[idx] = parse_ints(in, line);
    } else {
      malformed(line, "unknown keyword '" + keyword + "'");
    }
  }
  if (!vertex_total) throw Error(ErrorKind::MalformedInput, "missing 'vertices' line");
  const int V = *vertex_total;
  std::vector<std::array<Dart, 4>> rotations(V);
  for (const auto& [idx, darts] : vertex_lines) {
    if (idx >= V) throw Error(ErrorKind::MalformedInput, "vertex index " + std::to_string(idx) + " >= V");
    if (darts.size() != 4) {
      throw Error(ErrorKind::BadDegree, "vertex " + std::to_string(idx) + " lists " +
                                            std::to_string(darts.size()) + " darts, expected 4");
    }
    std::copy(darts.begin(), darts.end(), rotations[idx].begin());
  }
  if (static_cast<int>(vertex_lines.size()) != V) {
    throw Error(ErrorKind::MalformedInput, "expected " + std::to_string(V) + " vertex lines");
  }
  std::vector<std::array<Dart, 2>> edges(2 * V);
  for (const auto& [idx, darts] : edge_lines) {
    if (idx >= 2 * V) throw Error(ErrorKind::MalformedInput, "edge index " + std::to_string(idx) + " >= 2V");
    if (darts.size() != 2) {
      throw Error(ErrorKind::MalformedInput, "edge " + std::to_string(idx) + " must list 2 darts");
    }
    edges[idx] = {darts[0], darts[1]};
  }
  if (static_cast<int>(edge_lines.size()) != 2 * V) {
    throw Error(ErrorKind::MalformedInput, "expected " + std::to_string(2 * V) + " edge lines");
  }
  return WallSystemMap(std::move(rotations), std::move(edges));
}

WallSystemMap load_wall_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_wall_system(buf.str());
}

WallSystemMap grid_wall_system(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::MalformedInput, "grid sizes must be >= 1");
  const int V = m * n;
  std::vector<std::array<Dart, 4>> rotations(V);
  std::vector<std::array<Dart, 2>> edges(2 * V);
  auto id = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = id(i, j);
      rotations[v] = {4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3};
      const int east = id(i, (j + 1) % n);
      const int north = id((i + 1) % m, j);
      edges[2 * v] = {4 * v, 4 * east + 2};
      edges[2 * v + 1] = {4 * v + 1, 4 * north + 3};
    }
  }
  return WallSystemMap(std::move(rotations), std::move(edges));
}

WallSystemMap random_wall_system(std::mt19937_64& rng, int vertex_count) {
  const int n = 4 * vertex_count;
  std::vector<std::array<Dart, 4>> rotations(vertex_count);
  for (int v = 0; v < vertex_count; ++v) rotations[v] = {4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3};
  for (;;) {
    std::vector<Dart> darts(n);
    std::iota(darts.begin(), darts.end(), 0);
    std::shuffle(darts.begin(), darts.end(), rng);
    std::vector<std::array<Dart, 2>> edges;
    for (int k = 0; k < n; k += 2) edges.push_back({darts[k], darts[k + 1]});
    try {
      return WallSystemMap(rotations, std::move(edges));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BadEuler) throw;
    }
  }
}

}  // namespace wallnorm
