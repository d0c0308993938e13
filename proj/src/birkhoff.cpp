#include "wallnorm/birkhoff.hpp"

#include <algorithm>
#include <sstream>

#include "wallnorm/error.hpp"

namespace wallnorm {

SectionInvariants section_invariants(const WallSystemMap& map) {
  const std::int64_t v = map.vertex_count();
  const auto c = static_cast<std::int64_t>(map.curves().size());
  return {-2 * v, 2 * c, 1 + v - c};
}

ClassificationReport classify(const WallSystemMap& map, const HomologyBasis& basis, const EnumerationLimits& limits) {
  ClassificationReport report;
  report.map_hash = map.hash();
  report.basis_name = basis.name;
  report.ball = dual_ball(map, basis, limits);
  report.parity = gamma_parity(basis);
  report.invariants = section_invariants(map);
  for (const auto& p : bounding_box_points(report.ball)) {
    bool congruent = true;
    for (std::size_t i = 0; i < p.size(); ++i) congruent &= ((p[i] - report.parity[i]) % 2 + 2) % 2 == 0;
    if (!congruent) continue;
    const auto status = p.empty() ? Membership::Interior : contains(report.ball, p);
    report.points.push_back({p, status});
    switch (status) {
      case Membership::Interior: ++report.interior; break;
      case Membership::Boundary: ++report.boundary; break;
      case Membership::Outside: ++report.outside; break;
    }
  }
  return report;
}

std::string format_classification(const ClassificationReport& report) {
  std::ostringstream os;
  const auto& inv = report.invariants;
  for (const auto& p : report.points) {
    os << "point=" << format_tuple(p.point) << " status=" << membership_name(p.status);
    if (p.status == Membership::Outside) {
      os << " chi=- boundary=- genus=-\n";
    } else {
      os << " chi=" << inv.euler_characteristic << " boundary=" << inv.boundary_circles << " genus=" << inv.genus
         << '\n';
    }
  }
  os << "interior: " << report.interior << '\n';
  os << "boundary: " << report.boundary << '\n';
  os << "outside: " << report.outside << '\n';
  os << "sections: " << report.interior << '\n';
  return os.str();
}

std::string render_svg(const DualBall& ball, const std::vector<SectionClass>& points) {
  if (ball.ambient != 2) {
    throw Error(ErrorKind::WrongGenus, "plots need genus 1, the ball lives in R^" + std::to_string(ball.ambient));
  }
  if (ball.polygon.empty()) throw Error(ErrorKind::DegenerateBall, "no polygon to draw");
  constexpr int kUnit = 32;
  std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto& p : ball.polygon) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  for (const auto& s : points) {
    xmin = std::min(xmin, s.point[0]);
    xmax = std::max(xmax, s.point[0]);
    ymin = std::min(ymin, s.point[1]);
    ymax = std::max(ymax, s.point[1]);
  }
  // One unit of margin; the y axis points up.
  auto px = [&](std::int64_t x) { return (x - xmin + 1) * kUnit; };
  auto py = [&](std::int64_t y) { return (ymax - y + 1) * kUnit; };
  const auto width = (xmax - xmin + 2) * kUnit;
  const auto height = (ymax - ymin + 2) * kUnit;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  os << "  <polygon points=\"";
  for (std::size_t i = 0; i < ball.polygon.size(); ++i) {
    if (i) os << ' ';
    os << px(ball.polygon[i][0]) << ',' << py(ball.polygon[i][1]);
  }
  os << "\" fill=\"#e8eef7\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (const auto& s : points) {
    const char* colour = s.status == Membership::Interior   ? "#d62728"
                         : s.status == Membership::Boundary ? "#1f77b4"
                                                            : "#7f7f7f";
    os << "  <circle class=\"" << membership_name(s.status) << "\" cx=\"" << px(s.point[0]) << "\" cy=\""
       << py(s.point[1]) << "\" r=\"5\" fill=\"" << colour << "\"/>\n";
  }
  os << "  <circle class=\"origin\" cx=\"" << px(0) << "\" cy=\"" << py(0)
     << "\" r=\"8\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace wallnorm
