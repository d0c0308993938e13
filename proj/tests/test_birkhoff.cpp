#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "wallnorm/birkhoff.hpp"
#include "wallnorm/eikonal.hpp"

using namespace wallnorm;
using testing::error_of;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// p in the coordinates of `to`, given p in the coordinates of `from`.
Coords transform(const IndexMatrix& change, const Coords& p) {
  Coords out(p.size(), 0);
  for (Eigen::Index j = 0; j < change.cols(); ++j)
    for (Eigen::Index i = 0; i < change.rows(); ++i) out[j] += change(i, j) * p[i];
  return out;
}

}  // namespace

TEST_CASE("section invariants") {
  const auto g22 = section_invariants(grid_wall_system(2, 2));
  CHECK(g22.euler_characteristic == -8);
  CHECK(g22.boundary_circles == 8);
  CHECK(g22.genus == 1);
  const auto g11 = section_invariants(grid_wall_system(1, 1));
  CHECK(g11.euler_characteristic == -2);
  CHECK(g11.boundary_circles == 4);
  CHECK(g11.genus == 0);
  const auto eight = section_invariants(testing::figure_eight());
  CHECK(eight.euler_characteristic == -2);
  CHECK(eight.boundary_circles == 2);
  CHECK(eight.genus == 1);
}

TEST_CASE("classification of the grid fixtures") {
  const auto g11 = testing::grid(1, 1);
  const auto r11 = classify(g11.map, g11.basis);
  CHECK(r11.points.size() == 4);
  CHECK(r11.interior == 0);
  CHECK(r11.boundary == 4);
  CHECK_FALSE(r11.section_exists());
  CHECK(format_classification(r11).find("sections: 0\n") != std::string::npos);

  const auto g22 = testing::grid(2, 2);
  const auto r22 = classify(g22.map, g22.basis);
  CHECK(r22.points.size() == 9);
  CHECK(r22.interior == 1);
  CHECK(r22.boundary == 8);
  CHECK(r22.outside == 0);
  CHECK(r22.section_exists());
  for (const auto& p : r22.points) {
    CHECK((p.status == Membership::Interior) == (p.point == Coords{0, 0}));
    CHECK(p.point[0] % 2 == 0);
    CHECK(p.point[1] % 2 == 0);
  }
  const auto text = format_classification(r22);
  CHECK(text.find("point=(0,0) status=interior chi=-8 boundary=8 genus=1\n") != std::string::npos);
  CHECK(occurrences(text, "status=boundary") == 8);
}

TEST_CASE("classification properties on random maps") {
  std::mt19937_64 rng(17);
  for (const auto& map : testing::random_maps(rng, 12, 4)) {
    const auto basis = homology_basis(map);
    const auto report = classify(map, basis);
    CHECK(report.interior + report.boundary + report.outside == static_cast<std::int64_t>(report.points.size()));
    CHECK(report.invariants.genus >= 0);
    CHECK(report.invariants.genus == (2 - report.invariants.euler_characteristic - report.invariants.boundary_circles) / 2);
    const auto classes = eulerian_classes(map, basis);
    for (const auto& p : report.points) {
      if (p.status != Membership::Interior) continue;
      CHECK(classes->classes.count(p.point) == 1);
      const auto r = realize(map, basis, p.point);
      CHECK(class_of(map, r.coorientation, basis) == p.point);
    }
  }
}

TEST_CASE("classification is invariant under a change of basis") {
  std::vector<std::pair<WallSystemMap, std::pair<HomologyBasis, HomologyBasis>>> cases;
  for (const auto& [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    auto fx = testing::grid(m, n);
    auto computed = homology_basis(fx.map);
    auto smith = smith_basis(fx.map);
    cases.push_back({fx.map, {fx.basis, smith}});
    cases.push_back({std::move(fx.map), {std::move(fx.basis), std::move(computed)}});
  }
  std::mt19937_64 rng(3);
  for (auto& map : testing::random_maps(rng, 6, 4)) {
    auto a = homology_basis(map);
    auto b = smith_basis(map);
    cases.push_back({std::move(map), {std::move(a), std::move(b)}});
  }
  for (const auto& [map, bases] : cases) {
    const auto& [from, to] = bases;
    const auto change = change_of_basis(map, from, to);
    const auto ra = classify(map, from);
    const auto rb = classify(map, to);
    std::map<Coords, Membership> in_b;
    for (const auto& p : rb.points) in_b[p.point] = p.status;
    CHECK(ra.interior == rb.interior);
    CHECK(ra.boundary == rb.boundary);
    for (const auto& p : ra.points) {
      if (p.status == Membership::Outside) continue;
      const auto q = transform(change, p.point);
      REQUIRE(in_b.count(q) == 1);
      CHECK(in_b.at(q) == p.status);
    }
  }
}

TEST_CASE("svg rendering") {
  const auto g22 = testing::grid(2, 2);
  const auto r22 = classify(g22.map, g22.basis);
  const auto svg = render_svg(r22.ball, r22.points);
  CHECK(occurrences(svg, "class=\"interior\"") == 1);
  CHECK(occurrences(svg, "class=\"boundary\"") == 8);
  CHECK(occurrences(svg, "class=\"origin\"") == 1);
  // Square through (+-2,+-2) at 32 px per unit with one unit of margin.
  CHECK(svg.find("<polygon points=\"160,32 32,32 32,160 160,160\"") != std::string::npos);
  CHECK(render_svg(r22.ball, r22.points) == svg);

  const auto g11 = testing::grid(1, 1);
  const auto r11 = classify(g11.map, g11.basis);
  const auto svg11 = render_svg(r11.ball, r11.points);
  CHECK(occurrences(svg11, "class=\"interior\"") == 0);
  CHECK(occurrences(svg11, "class=\"boundary\"") == 4);

  std::mt19937_64 rng(8);
  const auto genus_two = testing::random_maps(rng, 1, 4, 2).front();
  const auto ball = dual_ball(genus_two, homology_basis(genus_two));
  CHECK(error_of([&] { render_svg(ball, {}); }) == ErrorKind::WrongGenus);
  // A ball whose class set was lost.
  DualBall corrupted = r22.ball;
  corrupted.points.clear();
  corrupted.extreme.clear();
  corrupted.polygon.clear();
  CHECK(error_of([&] { render_svg(corrupted, r22.points); }) == ErrorKind::DegenerateBall);
}
