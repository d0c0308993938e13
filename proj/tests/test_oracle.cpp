#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "wallnorm/normball.hpp"
#include "wallnorm/oracle.hpp"

using namespace wallnorm;
using testing::error_of;

namespace {

// Shortest closed walk per class by exhaustive DFS over walks of bounded length.
std::map<Coords, std::int64_t> exhaustive_cycles(const WallSystemMap& map, const HomologyBasis& basis, int max_len) {
  std::map<Coords, std::int64_t> best;
  DualWalk walk;
  auto dfs = [&](auto&& self, int start, int at) -> void {
    if (!walk.empty() && at == start) {
      const auto cls = class_of_walk(map, walk, basis);
      const auto len = static_cast<std::int64_t>(walk.size());
      auto it = best.find(cls);
      if (it == best.end() || it->second > len) best[cls] = len;
    }
    if (static_cast<int>(walk.size()) == max_len) return;
    for (int e = 0; e < map.edge_count(); ++e) {
      for (const int dir : {1, -1}) {
        const Crossing c{e, dir};
        if (crossing_source(map, c) != at) continue;
        walk.push_back(c);
        self(self, start, crossing_target(map, c));
        walk.pop_back();
      }
    }
  };
  for (int f = 0; f < map.face_count(); ++f) dfs(dfs, f, f);
  return best;
}

void check_certificate(const WallSystemMap& map, const HomologyBasis& basis, const Coords& a,
                       const MultiCurveResult& r) {
  Coords total(a.size(), 0);
  std::int64_t length = 0;
  for (const auto& c : r.certificate.cycles) {
    CHECK(is_closed(map, c.walk));
    CHECK(class_of_walk(map, c.walk, basis) == c.cls);
    CHECK(static_cast<std::int64_t>(c.walk.size()) == c.length);
    length += c.length;
    for (std::size_t i = 0; i < a.size(); ++i) total[i] += c.cls[i];
  }
  CHECK(total == a);
  CHECK(r.certificate.total_class == a);
  CHECK(length == r.value);
  CHECK(r.certificate.total_length == r.value);
}

}  // namespace

TEST_CASE("single cycles on grids") {
  const auto g11 = testing::grid(1, 1);
  CHECK(min_single_cycle(g11.map, g11.basis, {1, 0}, 4).length == 1);
  const auto g22 = testing::grid(2, 2);
  CHECK(min_single_cycle(g22.map, g22.basis, {1, 0}, 4).length == 2);
  CHECK(min_single_cycle(g22.map, g22.basis, {1, 1}, 4).length == 4);
  const auto w = min_single_cycle(g22.map, g22.basis, {1, 1}, 4).walk;
  CHECK(is_closed(g22.map, w));
  CHECK(class_of_walk(g22.map, w, g22.basis) == Coords{1, 1});
  CHECK(min_single_cycle(g22.map, g22.basis, {0, 0}, 2).length == 0);
  CHECK(error_of([&] { min_single_cycle(g22.map, g22.basis, {3, 0}, 2); }) == ErrorKind::BoxExceeded);
}

TEST_CASE("single cycles agree with exhaustive walk search") {
  std::mt19937_64 rng(5);
  std::vector<std::pair<WallSystemMap, HomologyBasis>> cases;
  for (const auto& [m, n] : {std::pair{1, 1}, {2, 2}, {1, 2}}) {
    auto fx = testing::grid(m, n);
    cases.emplace_back(std::move(fx.map), std::move(fx.basis));
  }
  for (auto& map : testing::random_maps(rng, 4, 2)) {
    auto basis = homology_basis(map);
    cases.emplace_back(std::move(map), std::move(basis));
  }
  for (const auto& [map, basis] : cases) {
    const int max_len = map.edge_count() <= 4 ? 6 : 5;
    for (const auto& [cls, len] : exhaustive_cycles(map, basis, max_len)) {
      if (std::all_of(cls.begin(), cls.end(), [](auto x) { return x == 0; })) continue;
      // Walks of length <= max_len cannot leave a box of that radius.
      CHECK(min_single_cycle(map, basis, cls, max_len).length == len);
    }
  }
}

TEST_CASE("multicurve minima and certificates") {
  const auto g22 = testing::grid(2, 2);
  const auto zero = min_multicurve(g22.map, g22.basis, {0, 0});
  CHECK(zero.value == 0);
  CHECK(zero.certificate.cycles.empty());
  const auto r = min_multicurve(g22.map, g22.basis, {4, 1});
  CHECK(r.value == 10);
  check_certificate(g22.map, g22.basis, {4, 1}, r);

  const auto g11 = testing::grid(1, 1);
  const std::vector<Coords> classes{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (int p = -2; p <= 2; ++p) {
    for (int q = -2; q <= 2; ++q) {
      std::int64_t expected = 0;
      for (const auto& c : classes) expected = std::max(expected, dot(c, {p, q}));
      const auto m = min_multicurve(g11.map, g11.basis, {p, q});
      CHECK(m.value == expected);
      check_certificate(g11.map, g11.basis, {p, q}, m);
    }
  }
}

TEST_CASE("truncation: monotone in the radius, escalation limits") {
  const auto g22 = testing::grid(2, 2);
  std::int64_t previous = std::numeric_limits<std::int64_t>::max();
  for (int h = 3; h <= 8; ++h) {
    const auto len = min_single_cycle(g22.map, g22.basis, {3, 1}, h).length;
    CHECK(len <= previous);
    previous = len;
  }
  OracleOptions tight;
  tight.radius = 1;
  tight.max_radius = 1;
  CHECK(error_of([&] { min_multicurve(g22.map, g22.basis, {3, 0}, tight); }) == ErrorKind::ResourceLimit);
  tight.max_radius = 3;
  tight.radius = 3;
  const auto r = min_multicurve(g22.map, g22.basis, {3, 0}, tight);
  CHECK(r.value == 6);
  CHECK(r.radius == 3);
}

TEST_CASE("min equals max on the grid fixtures") {
  for (const auto& [m, n, radius] : {std::tuple{1, 1, 3}, {2, 2, 3}, {2, 3, 2}}) {
    const auto fx = testing::grid(m, n);
    const auto report = verify_min_max(fx.map, fx.basis, radius);
    CHECK(report.checked == (2 * radius + 1) * (2 * radius + 1));
    CHECK(report.discrepancies.empty());
  }
}

TEST_CASE("min equals max on random maps; oracle symmetry and subadditivity") {
  std::mt19937_64 rng(99);
  for (const auto& map : testing::random_maps(rng, 10, 4)) {
    const auto basis = homology_basis(map);
    const int radius = basis.rank() == 2 ? 2 : 1;
    const auto report = verify_min_max(map, basis, radius);
    CHECK(report.discrepancies.empty());
    std::map<Coords, std::int64_t> value(report.values.begin(), report.values.end());
    for (const auto& [a, x] : value) {
      Coords neg = a;
      for (auto& v : neg) v = -v;
      CHECK(value.at(neg) == x);
      for (const auto& [b, y] : value) {
        Coords s = a;
        bool inside = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
          s[i] += b[i];
          inside &= std::abs(s[i]) <= radius;
        }
        if (inside) CHECK(value.at(s) <= x + y);
      }
    }
  }
}
