#include "wallnorm/homology.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "wallnorm/cover.hpp"
#include "wallnorm/error.hpp"
#include "wallnorm/smith.hpp"

namespace wallnorm {

int crossing_source(const WallSystemMap& map, const Crossing& c) {
  return c.direction > 0 ? map.face_right(c.link) : map.face_left(c.link);
}

int crossing_target(const WallSystemMap& map, const Crossing& c) {
  return c.direction > 0 ? map.face_left(c.link) : map.face_right(c.link);
}

bool is_closed(const WallSystemMap& map, const DualWalk& walk) {
  if (walk.empty()) return true;
  for (const auto& c : walk) {
    if (c.link < 0 || c.link >= map.edge_count() || (c.direction != 1 && c.direction != -1)) {
      return false;
    }
  }
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (crossing_target(map, walk[i]) != crossing_source(map, walk[i + 1])) return false;
  }
  return crossing_target(map, walk.back()) == crossing_source(map, walk.front());
}

DualWalk reversed(const DualWalk& walk) {
  DualWalk out;
  out.reserve(walk.size());
  for (auto it = walk.rbegin(); it != walk.rend(); ++it) out.push_back({it->link, -it->direction});
  return out;
}

Coords HomologyBasis::link_weight(int link) const {
  Coords w(rank());
  for (int i = 0; i < rank(); ++i) w[i] = cocycles(i, link);
  return w;
}

BoundaryMatrices boundary_matrices(const WallSystemMap& map) {
  BoundaryMatrices b;
  b.d1 = IndexMatrix::Zero(map.face_count(), map.edge_count());
  b.d2 = IndexMatrix::Zero(map.edge_count(), map.vertex_count());
  for (int e = 0; e < map.edge_count(); ++e) {
    b.d1(map.face_left(e), e) += 1;
    b.d1(map.face_right(e), e) -= 1;
  }
  for (Dart d = 0; d < map.dart_count(); ++d) b.d2(map.edge_of(d), map.vertex_of(d)) += map.kappa(d);
  return b;
}

namespace {

// Cancels adjacent back-and-forth crossings, cyclically.
DualWalk free_reduce(const DualWalk& walk) {
  DualWalk out;
  for (const auto& c : walk) {
    if (!out.empty() && out.back().link == c.link && out.back().direction == -c.direction) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo].link == out[hi - 1].link &&
         out[lo].direction == -out[hi - 1].direction) {
    ++lo;
    --hi;
  }
  return DualWalk(out.begin() + lo, out.begin() + hi);
}

struct SpanningTree {
  std::vector<char> in_tree;  // per link
  std::vector<DualWalk> path_from_root;
};

SpanningTree kruskal_tree(const WallSystemMap& map) {
  const int F = map.face_count();
  SpanningTree t;
  t.in_tree.assign(map.edge_count(), 0);
  std::vector<int> parent(F);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < map.edge_count(); ++e) {
    const int a = find(map.face_right(e)), b = find(map.face_left(e));
    if (a == b) continue;
    parent[std::max(a, b)] = std::min(a, b);
    t.in_tree[e] = 1;
  }
  t.path_from_root.assign(F, {});
  std::vector<char> seen(F, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int e = 0; e < map.edge_count(); ++e) {
      if (!t.in_tree[e]) continue;
      for (const int dir : {+1, -1}) {
        const Crossing c{e, dir};
        if (crossing_source(map, c) != f) continue;
        const int g = crossing_target(map, c);
        if (seen[g]) continue;
        seen[g] = 1;
        t.path_from_root[g] = t.path_from_root[f];
        t.path_from_root[g].push_back(c);
        queue.push_back(g);
      }
    }
  }
  return t;
}

IntegerMatrix to_integer(const IndexMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = Integer(m(r, c));
  return out;
}

IndexMatrix to_index(const IntegerMatrix& m) {
  IndexMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = to_int64(m(r, c));
  return out;
}

struct CoordsHash {
  std::size_t operator()(const Coords& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto x : c) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

// True when the columns of m extend to a basis of Z^rows.
bool primitive_columns(const IndexMatrix& m) {
  const auto snf = smith_normal_form(to_integer(m));
  if (snf.rank != m.cols()) return false;
  for (int i = 0; i < snf.rank; ++i) {
    if (snf.diagonal(i, i) != 1) return false;
  }
  return true;
}

// Shortest closed dual walks by class, explored level by level from every face;
// returns 2g walks forming a basis, or nothing if the exploration caps are hit.
std::optional<std::vector<DualWalk>> shortest_walk_basis(const WallSystemMap& map,
                                                         const HomologyBasis& basis,
                                                         std::size_t max_level) {
  constexpr std::size_t kMaxStates = 2'000'000;
  const int F = map.face_count();
  const int dim = basis.rank();
  const auto steps = lifted_steps(map, basis);

  struct Node {
    int face;
    Coords h;
    std::int64_t parent;
    Crossing via;
  };
  struct Search {
    std::vector<Node> nodes;
    std::vector<std::unordered_map<Coords, std::int64_t, CoordsHash>> index;
    std::vector<std::int64_t> frontier;
  };
  std::vector<Search> searches(F);
  for (int f = 0; f < F; ++f) {
    auto& s = searches[f];
    s.index.resize(F);
    s.nodes.push_back({f, Coords(dim, 0), -1, {-1, 0}});
    s.index[f][Coords(dim, 0)] = 0;
    s.frontier = {0};
  }
  auto walk_of = [](const Search& s, std::int64_t id) {
    DualWalk w;
    for (; s.nodes[id].parent >= 0; id = s.nodes[id].parent) w.push_back(s.nodes[id].via);
    std::reverse(w.begin(), w.end());
    return w;
  };

  // class (sign-normalized) -> shortest witness found so far; std::map keeps
  // lexicographic order for ties.
  std::map<std::size_t, std::map<Coords, DualWalk>> by_length;
  std::unordered_map<Coords, std::size_t, CoordsHash> best;
  std::size_t total = F;

  for (std::size_t level = 1; level <= max_level; ++level) {
    for (int f = 0; f < F; ++f) {
      auto& s = searches[f];
      std::vector<std::int64_t> next;
      for (const auto id : s.frontier) {
        const int face = s.nodes[id].face;
        for (const auto& step : steps[face]) {
          Coords h = s.nodes[id].h;
          for (int i = 0; i < dim; ++i) h[i] += step.shift[i];
          auto& slot = s.index[step.target];
          if (slot.count(h)) continue;
          const auto nid = static_cast<std::int64_t>(s.nodes.size());
          slot.emplace(h, nid);
          s.nodes.push_back({step.target, h, id, step.crossing});
          next.push_back(nid);
          if (step.target == f && std::any_of(h.begin(), h.end(), [](auto x) { return x != 0; })) {
            Coords key = h;
            const auto lead = std::find_if(key.begin(), key.end(), [](auto x) { return x != 0; });
            DualWalk w = walk_of(s, nid);
            if (*lead < 0) {
              for (auto& x : key) x = -x;
              w = reversed(w);
            }
            if (!best.count(key)) {
              best[key] = level;
              by_length[level].emplace(key, std::move(w));
            }
          }
        }
      }
      total += next.size();
      s.frontier = std::move(next);
    }
    if (total > kMaxStates) return std::nullopt;

    // Greedy successive minima.
    IndexMatrix chosen(dim, 0);
    std::vector<DualWalk> walks;
    for (const auto& [len, classes] : by_length) {
      for (const auto& [cls, walk] : classes) {
        IndexMatrix trial(dim, chosen.cols() + 1);
        trial.leftCols(chosen.cols()) = chosen;
        for (int i = 0; i < dim; ++i) trial(i, chosen.cols()) = cls[i];
        if (!primitive_columns(trial)) continue;
        chosen = trial;
        walks.push_back(walk);
        if (chosen.cols() == dim) return walks;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

HomologyBasis smith_basis(const WallSystemMap& map) {
  const int rank = 2 * map.genus();
  HomologyBasis basis;
  basis.name = "smith";
  basis.cocycles = IndexMatrix::Zero(rank, map.edge_count());
  if (rank == 0) return basis;

  const auto tree = kruskal_tree(map);
  std::vector<int> nontree;
  for (int e = 0; e < map.edge_count(); ++e) {
    if (!tree.in_tree[e]) nontree.push_back(e);
  }
  const int k = static_cast<int>(nontree.size());
  const auto d2 = boundary_matrices(map).d2;
  IntegerMatrix relations(k, map.vertex_count());
  for (int i = 0; i < k; ++i)
    for (int v = 0; v < map.vertex_count(); ++v) relations(i, v) = Integer(d2(nontree[i], v));

  const auto snf = smith_normal_form(relations);
  for (int i = 0; i < snf.rank; ++i) {
    if (snf.diagonal(i, i) != 1) {
      throw Error(ErrorKind::TorsionDetected,
                  "invariant factor " + snf.diagonal(i, i).str() + " in H_1 relations");
    }
  }
  if (k - snf.rank != rank) {
    throw Error(ErrorKind::TorsionDetected, "free rank " + std::to_string(k - snf.rank) +
                                                " differs from 2g = " + std::to_string(rank));
  }
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < k; ++j) basis.cocycles(i, nontree[j]) = to_int64(snf.left(snf.rank + i, j));

  const IntegerMatrix generators = unimodular_inverse(snf.left);
  for (int i = 0; i < rank; ++i) {
    DualWalk walk;
    for (int j = 0; j < k; ++j) {
      const std::int64_t times = to_int64(generators(j, snf.rank + i));
      const int e = nontree[j];
      DualWalk loop = tree.path_from_root[map.face_right(e)];
      loop.push_back({e, +1});
      const auto back = reversed(tree.path_from_root[map.face_left(e)]);
      loop.insert(loop.end(), back.begin(), back.end());
      if (times < 0) loop = reversed(loop);
      for (std::int64_t t = 0; t < std::abs(times); ++t) walk.insert(walk.end(), loop.begin(), loop.end());
    }
    basis.cycles.push_back(free_reduce(walk));
  }
  return basis;
}

HomologyBasis homology_basis(const WallSystemMap& map) {
  HomologyBasis smith = smith_basis(map);
  if (smith.rank() == 0) {
    smith.name = "computed";
    return smith;
  }
  std::size_t cap = 0;
  for (const auto& c : smith.cycles) cap = std::max(cap, c.size());
  if (auto walks = shortest_walk_basis(map, smith, cap)) {
    return set_user_basis(map, *walks, smith, "computed");
  }
  smith.name = "computed";
  return smith;
}

Coords class_of_walk(const WallSystemMap& map, const DualWalk& walk, const HomologyBasis& basis) {
  if (!is_closed(map, walk)) throw Error(ErrorKind::OpenWalk, "walk " + format_walk(walk) + " is not closed");
  Coords out(basis.rank(), 0);
  for (const auto& c : walk)
    for (int i = 0; i < basis.rank(); ++i) out[i] += c.direction * basis.cocycles(i, c.link);
  return out;
}

Coords gamma_parity(const HomologyBasis& basis) {
  Coords p;
  for (const auto& c : basis.cycles) p.push_back(static_cast<std::int64_t>(c.size() % 2));
  return p;
}

IndexMatrix change_of_basis(const WallSystemMap& map, const HomologyBasis& from,
                            const HomologyBasis& to) {
  IndexMatrix m(from.rank(), to.rank());
  for (int j = 0; j < to.rank(); ++j) {
    const Coords c = class_of_walk(map, to.cycles[j], from);
    for (int i = 0; i < from.rank(); ++i) m(i, j) = c[i];
  }
  return m;
}

HomologyBasis set_user_basis(const WallSystemMap& map, const std::vector<DualWalk>& walks,
                             const HomologyBasis& reference, std::string name) {
  const int rank = reference.rank();
  if (static_cast<int>(walks.size()) != rank) {
    throw Error(ErrorKind::NotABasis, "expected " + std::to_string(rank) + " cycles, got " +
                                          std::to_string(walks.size()));
  }
  IndexMatrix m(rank, rank);
  for (int j = 0; j < rank; ++j) {
    const Coords c = class_of_walk(map, walks[j], reference);
    for (int i = 0; i < rank; ++i) m(i, j) = c[i];
  }
  const IntegerMatrix mi = to_integer(m);
  const Integer det = determinant(mi);
  if (det != 1 && det != -1) {
    throw Error(ErrorKind::NotABasis, "class matrix has determinant " + det.str());
  }
  HomologyBasis out;
  out.name = std::move(name);
  out.cycles = walks;
  out.cocycles = to_index(IntegerMatrix(unimodular_inverse(mi) * to_integer(reference.cocycles)));
  return out;
}

std::vector<DualWalk> grid_basis_walks(int m, int n) {
  DualWalk across_vertical;  // row band 0, crosses north edges of (0, j)
  across_vertical.push_back({1, +1});
  for (int j = n - 1; j >= 1; --j) across_vertical.push_back({2 * j + 1, +1});
  DualWalk across_horizontal;  // column band 0, crosses east edges of (i, 0)
  for (int i = 1; i < m; ++i) across_horizontal.push_back({2 * (i * n), +1});
  across_horizontal.push_back({0, +1});
  return {across_vertical, across_horizontal};
}

std::string format_walk(const DualWalk& walk) {
  std::ostringstream os;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i) os << ' ';
    os << walk[i].link << (walk[i].direction > 0 ? '+' : '-');
  }
  return os.str();
}

std::string serialize_basis_walks(const std::vector<DualWalk>& walks) {
  std::ostringstream os;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    os << "cycle " << i << ':';
    if (!walks[i].empty()) os << ' ' << format_walk(walks[i]);
    os << '\n';
  }
  return os.str();
}

std::vector<DualWalk> parse_basis_walks(std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::map<int, DualWalk> cycles;
  std::string raw;
  int line = 0;
  auto fail = [&line](const std::string& what) {
    throw Error(ErrorKind::MalformedInput, "basis line " + std::to_string(line) + ": " + what);
  };
  while (std::getline(stream, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream in(raw);
    std::string keyword, label;
    if (!(in >> keyword)) continue;
    if (keyword != "cycle") fail("expected 'cycle'");
    if (!(in >> label) || label.size() < 2 || label.back() != ':') fail("expected '<index>:'");
    label.pop_back();
    int idx = -1;
    try {
      std::size_t used = 0;
      idx = std::stoi(label, &used);
      if (used != label.size() || idx < 0) fail("bad index");
    } catch (const std::logic_error&) {
      fail("bad index");
    }
    if (cycles.count(idx)) fail("duplicate cycle " + std::to_string(idx));
    DualWalk walk;
    std::string token;
    while (in >> token) {
      const char sign = token.back();
      if (token.size() < 2 || (sign != '+' && sign != '-')) fail("bad crossing '" + token + "'");
      token.pop_back();
      try {
        std::size_t used = 0;
        const int link = std::stoi(token, &used);
        if (used != token.size() || link < 0) fail("bad link '" + token + "'");
        walk.push_back({link, sign == '+' ? 1 : -1});
      } catch (const std::logic_error&) {
        fail("bad link '" + token + "'");
      }
    }
    cycles[idx] = std::move(walk);
  }
  std::vector<DualWalk> out;
  for (auto& [idx, walk] : cycles) {
    if (idx != static_cast<int>(out.size())) {
      throw Error(ErrorKind::MalformedInput, "cycle indices must be 0..k-1");
    }
    out.push_back(std::move(walk));
  }
  return out;
}

std::vector<DualWalk> load_basis_walks(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_basis_walks(buf.str());
}

}  // namespace wallnorm
