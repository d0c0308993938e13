#include "wallnorm/eikonal.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>

#include "wallnorm/error.hpp"
#include "wallnorm/normball.hpp"

namespace wallnorm {

namespace {

constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::max();

bool within(const Coords& h, int region) {
  return std::all_of(h.begin(), h.end(), [region](std::int64_t x) { return x >= -region && x <= region; });
}

std::int64_t inf_norm(const Coords& a) {
  std::int64_t m = 0;
  for (const auto x : a) m = std::max(m, x < 0 ? -x : x);
  return m;
}

bool congruent(const Coords& n, const Coords& parity) {
  for (std::size_t i = 0; i < n.size(); ++i)
    if (((n[i] - parity[i]) % 2 + 2) % 2 != 0) return false;
  return true;
}

std::optional<Coorientation> lookup(const WallSystemMap& map, const HomologyBasis& basis, const Coords& n,
                                    const EnumerationLimits& limits) {
  std::optional<Coorientation> found;
  EnumerationOptions options;
  options.limits = limits;
  options.visit = [&](const Coorientation& c) {
    if (!found && class_of(map, c, basis) == n) found = c;
  };
  enumerate_eulerian(map, basis, options).require_complete();
  return found;
}

}  // namespace

SeedField seed_values(const HomologyBasis& basis, const Coords& n, int radius) {
  SeedField seed{n, CoverBox(1, basis.rank(), radius), {}};
  seed.values.resize(static_cast<std::size_t>(seed.cells.size()));
  for (std::int64_t c = 0; c < seed.cells.size(); ++c) seed.values[c] = dot(n, seed.cells.coords_of(c));
  return seed;
}

EikonalField extend_highest(const WallSystemMap& map, const HomologyBasis& basis, const SeedField& seed) {
  EikonalField field{CoverBox(map.face_count(), basis.rank(), seed.cells.radius()), {}};
  field.values.assign(static_cast<std::size_t>(field.box.size()), kUnset);
  const auto steps = lifted_steps(map, basis);
  // Multi-source Dijkstra with unit weights; sources start at their seed value.
  using Entry = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (std::int64_t c = 0; c < seed.cells.size(); ++c) {
    const auto s = field.box.index(0, seed.cells.coords_of(c));
    field.values[s] = seed.values[c];
    queue.push({seed.values[c], s});
  }
  while (!queue.empty()) {
    const auto [v, x] = queue.top();
    queue.pop();
    if (v != field.values[x]) continue;
    for (const auto& step : steps[field.box.face_of(x)]) {
      const auto y = field.box.neighbour(x, step);
      if (y < 0 || field.values[y] <= v + 1) continue;
      field.values[y] = v + 1;
      queue.push({v + 1, y});
    }
  }
  return field;
}

std::int64_t eikonal_violations(const WallSystemMap& map, const HomologyBasis& basis, const EikonalField& field,
                                 int region) {
  const auto steps = lifted_steps(map, basis);
  std::int64_t bad = 0;
  for (std::int64_t x = 0; x < field.box.size(); ++x) {
    if (!within(field.box.coords_of(x), region)) continue;
    for (const auto& step : steps[field.box.face_of(x)]) {
      const auto y = field.box.neighbour(x, step);
      if (y < 0 || !within(field.box.coords_of(y), region)) continue;
      // Each wall is seen from both sides; count it once.
      if (step.crossing.direction < 0) continue;
      const auto fx = field.values[x], fy = field.values[y];
      if (fx == kUnset || fy == kUnset || (fy - fx != 1 && fx - fy != 1)) ++bad;
    }
  }
  return bad;
}

std::int64_t equivariance_violations(const EikonalField& field, const Coords& n, int region) {
  std::vector<Coords> cells;
  const CoverBox classes(1, field.box.dim(), region);
  for (std::int64_t c = 0; c < classes.size(); ++c) cells.push_back(classes.coords_of(c));
  std::int64_t bad = 0;
  Coords u(field.box.dim());
  for (int f = 0; f < field.box.faces(); ++f) {
    for (const auto& h : cells) {
      const auto fh = field.at(f, h);
      for (const auto& k : cells) {
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = k[i] - h[i];
        const auto fk = field.at(f, k);
        if (fh == kUnset || fk == kUnset || fk - fh != dot(n, u)) ++bad;
      }
    }
  }
  return bad;
}

std::vector<int> read_signs(const WallSystemMap& map, const HomologyBasis& basis, const EikonalField& field) {
  std::vector<int> signs(map.edge_count(), 0);
  const Coords zero(basis.rank(), 0);
  for (int e = 0; e < map.edge_count(); ++e) {
    const LiftedStep step{{e, +1}, map.face_left(e), basis.link_weight(e)};
    const auto x = field.box.index(map.face_right(e), zero);
    const auto y = field.box.neighbour(x, step);
    if (y < 0 || field.values[x] == kUnset || field.values[y] == kUnset) continue;
    const auto delta = field.values[y] - field.values[x];
    if (delta == 1 || delta == -1) signs[e] = static_cast<int>(delta);
  }
  return signs;
}

const char* realized_by_name(RealizedBy m) {
  switch (m) {
    case RealizedBy::Eikonal: return "eikonal";
    case RealizedBy::EnumerationFallback: return "enumeration-fallback";
    case RealizedBy::Lookup: return "lookup";
  }
  return "?";
}

RealizationResult realize(const WallSystemMap& map, const HomologyBasis& basis, const Coords& n,
                          const RealizeOptions& options) {
  if (static_cast<int>(n.size()) != basis.rank()) {
    throw Error(ErrorKind::MalformedInput, "target has " + std::to_string(n.size()) + " coordinates, expected " +
                                               std::to_string(basis.rank()));
  }
  if (!congruent(n, gamma_parity(basis))) {
    throw Error(ErrorKind::NotRealizable, "parity: " + format_tuple(n) + " is not congruent to [gamma]_2 = " +
                                              format_tuple(gamma_parity(basis)) + " mod 2");
  }
  const auto ball = dual_ball(map, basis, options.limits);
  const auto where = basis.rank() == 0 ? Membership::Interior : contains(ball, n);
  if (where == Membership::Outside) {
    throw Error(ErrorKind::NotRealizable, "outside-ball: " + format_tuple(n) + " lies outside the dual unit ball");
  }

  RealizationResult out;
  out.target = n;
  auto from_enumeration = [&](RealizedBy how) {
    auto found = lookup(map, basis, n, options.limits);
    if (!found) throw Error(ErrorKind::NotRealizable, "no Eulerian coorientation of class " + format_tuple(n));
    out.coorientation = std::move(*found);
    out.method = how;
    return out;
  };
  if (options.method == RealizeMethod::Lookup) return from_enumeration(RealizedBy::Lookup);

  const int cap = where == Membership::Boundary ? 4 * options.max_radius : options.max_radius;
  int radius = std::min<int>(cap, static_cast<int>(inf_norm(n)) + 2);
  std::optional<std::vector<int>> previous;
  for (;;) {
    if (CoverBox::state_count(map.face_count(), basis.rank(), radius) > options.max_states) break;
    const auto field = extend_highest(map, basis, seed_values(basis, n, radius));
    const auto signs = read_signs(map, basis, field);
    const bool valid = std::none_of(signs.begin(), signs.end(), [](int s) { return s == 0; });
    if (valid && previous && *previous == signs) {
      Coorientation c{std::vector<std::int8_t>(signs.begin(), signs.end())};
      if (is_eulerian(map, c) && class_of(map, c, basis) == n) {
        out.coorientation = std::move(c);
        out.method = RealizedBy::Eikonal;
        out.radius = radius;
        return out;
      }
    }
    previous = signs;
    if (radius >= cap) break;
    radius = std::min(2 * radius, cap);
  }
  if (options.method == RealizeMethod::Eikonal) {
    throw Error(ErrorKind::ResourceLimit, "eikonal extension did not stabilize for " + format_tuple(n) +
                                              " within radius " + std::to_string(cap));
  }
  return from_enumeration(RealizedBy::EnumerationFallback);
}

}  // namespace wallnorm
