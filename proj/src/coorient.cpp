#include "wallnorm/coorient.hpp"

#include <deque>
#include <sstream>

#include "wallnorm/error.hpp"

namespace wallnorm {

Coorientation Coorientation::negated() const {
  Coorientation out = *this;
  for (auto& s : out.signs) s = static_cast<std::int8_t>(-s);
  return out;
}

namespace {

// Local crossing signs of the counterclockwise loop around a vertex.
std::array<int, 4> local_signs(const WallSystemMap& map, const Coorientation& coor, int vertex) {
  std::array<int, 4> t{};
  const auto& r = map.rotation(vertex);
  for (int k = 0; k < 4; ++k) t[k] = map.kappa(r[k]) * coor.signs[map.edge_of(r[k])];
  return t;
}

void check_length(const WallSystemMap& map, const Coorientation& coor) {
  if (coor.size() != map.edge_count()) {
    throw Error(ErrorKind::MalformedInput, "coorientation has " + std::to_string(coor.size()) +
                                               " signs for " + std::to_string(map.edge_count()) + " edges");
  }
}

}  // namespace

bool is_eulerian(const WallSystemMap& map, const Coorientation& coor) {
  check_length(map, coor);
  for (int v = 0; v < map.vertex_count(); ++v) {
    const auto t = local_signs(map, coor, v);
    if (t[0] + t[1] + t[2] + t[3] != 0) return false;
  }
  return true;
}

VertexType vertex_type(const WallSystemMap& map, const Coorientation& coor, int vertex) {
  const auto t = local_signs(map, coor, vertex);
  if (t[0] + t[1] + t[2] + t[3] != 0) return VertexType::NotEulerian;
  // Opposite darts carry one strand: equal loop signs mean the coorientation
  // flips along the strand.
  return t[0] == t[2] ? VertexType::Alternating : VertexType::Transparent;
}

std::int64_t evaluate(const WallSystemMap& map, const Coorientation& coor, const DualWalk& walk) {
  check_length(map, coor);
  if (!is_closed(map, walk)) throw Error(ErrorKind::OpenWalk, "walk " + format_walk(walk) + " is not closed");
  std::int64_t total = 0;
  for (const auto& c : walk) total += coor.signs[c.link] * c.direction;
  return total;
}

Coords class_of(const WallSystemMap& map, const Coorientation& coor, const HomologyBasis& basis) {
  if (!is_eulerian(map, coor)) throw Error(ErrorKind::NotEulerian, "class of a non-Eulerian coorientation");
  Coords out;
  out.reserve(basis.rank());
  for (const auto& cycle : basis.cycles) out.push_back(evaluate(map, coor, cycle));
  return out;
}

void EulerianSet::require_complete() const {
  if (!complete) {
    throw Error(ErrorKind::ResourceLimit, "enumeration stopped at " + std::to_string(count) +
                                              " Eulerian coorientations; raise the cap");
  }
}

EulerianSet enumerate_eulerian(const WallSystemMap& map, const HomologyBasis& basis,
                               const EnumerationOptions& options) {
  const int E = map.edge_count();
  const int dim = basis.rank();
  // Net crossings of each basis cycle through each edge.
  std::vector<Coords> per_edge(E, Coords(dim, 0));
  for (int i = 0; i < dim; ++i) {
    if (!is_closed(map, basis.cycles[i])) throw Error(ErrorKind::OpenWalk, "basis cycle is not closed");
    for (const auto& c : basis.cycles[i]) per_edge[c.link][i] += c.direction;
  }

  EulerianSet out;
  Coorientation current{std::vector<std::int8_t>(E, 1)};
  std::vector<int> partial(map.vertex_count(), 0);
  std::vector<int> remaining(map.vertex_count(), 4);
  Coords cls(dim, 0);
  bool stop = false;

  auto emit = [&] {
    if (out.count == options.limits.max_count) {
      out.complete = false;
      stop = true;
      return;
    }
    ++out.count;
    ++out.classes[cls];
    if (options.keep_items) out.items.push_back(current);
    if (options.visit) options.visit(current);
  };

  auto recurse = [&](auto&& self, int e) -> void {
    if (stop) return;
    if (e == E) {
      emit();
      return;
    }
    const int vt = map.vertex_of(map.tail(e));
    const int vh = map.vertex_of(map.head(e));
    for (const int s : {+1, -1}) {
      partial[vt] += s;
      partial[vh] -= s;
      --remaining[vt];
      --remaining[vh];
      if (std::abs(partial[vt]) <= remaining[vt] && std::abs(partial[vh]) <= remaining[vh]) {
        current.signs[e] = static_cast<std::int8_t>(s);
        for (int i = 0; i < dim; ++i) cls[i] += s * per_edge[e][i];
        self(self, e + 1);
        for (int i = 0; i < dim; ++i) cls[i] -= s * per_edge[e][i];
      }
      partial[vt] -= s;
      partial[vh] += s;
      ++remaining[vt];
      ++remaining[vh];
      if (stop) return;
    }
  };
  recurse(recurse, 0);
  return out;
}

Coorientation checkerboard_coorientation(const WallSystemMap& map) {
  const int F = map.face_count();
  std::vector<int> colour(F, -1);
  std::deque<int> queue{0};
  colour[0] = 0;
  const auto dual = map.dual_graph();
  std::vector<std::vector<int>> adjacent(F);
  for (const auto& l : dual.links) {
    adjacent[l.from].push_back(l.to);
    adjacent[l.to].push_back(l.from);
  }
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (const int g : adjacent[f]) {
      if (colour[g] < 0) {
        colour[g] = 1 - colour[f];
        queue.push_back(g);
      }
    }
  }
  Coorientation out{std::vector<std::int8_t>(map.edge_count(), 1)};
  for (const auto& l : dual.links) {
    if (colour[l.from] == colour[l.to]) {
      throw Error(ErrorKind::NotBipartite, "faces on both sides of edge " + std::to_string(l.edge) +
                                               " get the same colour; [gamma]_2 is nonzero");
    }
    out.signs[l.edge] = colour[l.to] == 0 ? 1 : -1;
  }
  return out;
}

std::vector<Coorientation> brunella_coorientations(const WallSystemMap& map) {
  const auto& curves = map.curves();
  if (curves.size() >= 63) throw Error(ErrorKind::ResourceLimit, "too many curves to list 2^c coorientations");
  std::vector<Coorientation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << curves.size()); ++mask) {
    Coorientation c{std::vector<std::int8_t>(map.edge_count(), 0)};
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const int flip = (mask >> i) & 1 ? -1 : 1;
      // Cross each traversed edge from the right of the traversal to its left.
      for (const Dart d : curves[i].darts) c.signs[map.edge_of(d)] = static_cast<std::int8_t>(flip * map.kappa(d));
      for (const Dart d : curves[i].reverse) c.signs[map.edge_of(d)] = static_cast<std::int8_t>(-flip * map.kappa(d));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string serialize_coorientation(const Coorientation& coor) {
  std::ostringstream os;
  for (int e = 0; e < coor.size(); ++e) os << "edge " << e << ": " << (coor.signs[e] > 0 ? '+' : '-') << '\n';
  return os.str();
}

Coorientation parse_coorientation(std::string_view text, int edge_count) {
  std::istringstream stream{std::string(text)};
  Coorientation out{std::vector<std::int8_t>(edge_count, 0)};
  std::string raw;
  int line = 0;
  auto fail = [&line](const std::string& what) {
    throw Error(ErrorKind::MalformedInput, "coorientation line " + std::to_string(line) + ": " + what);
  };
  while (std::getline(stream, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream in(raw);
    std::string keyword, label, sign, extra;
    if (!(in >> keyword)) continue;
    if (keyword != "edge" || !(in >> label >> sign) || (in >> extra)) fail("expected 'edge <j>: <+|->'");
    if (label.size() < 2 || label.back() != ':') fail("expected '<j>:'");
    label.pop_back();
    int e = -1;
    try {
      std::size_t used = 0;
      e = std::stoi(label, &used);
      if (used != label.size()) fail("bad edge index");
    } catch (const std::logic_error&) {
      fail("bad edge index");
    }
    if (e < 0 || e >= edge_count) fail("edge index out of range");
    if (out.signs[e] != 0) fail("duplicate edge " + std::to_string(e));
    if (sign != "+" && sign != "-") fail("sign must be + or -");
    out.signs[e] = sign == "+" ? 1 : -1;
  }
  for (int e = 0; e < edge_count; ++e) {
    if (out.signs[e] == 0) throw Error(ErrorKind::MalformedInput, "edge " + std::to_string(e) + " has no sign");
  }
  return out;
}

}  // namespace wallnorm
