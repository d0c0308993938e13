#include "wallnorm/normball.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "wallnorm/error.hpp"
#include "wallnorm/simplex.hpp"

namespace wallnorm {

namespace {

std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const EulerianSet>> class_cache;

std::string cache_key(const WallSystemMap& map, const HomologyBasis& basis) {
  return map.serialize() + "--\n" + serialize_basis_walks(basis.cycles);
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<Eigen::Index> row_reduce(RationalMatrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pick = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pick = r;
        break;
      }
    }
    if (pick < 0) continue;
    m.row(row).swap(m.row(pick));
    const Rational p = m(row, col);
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) /= p;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int affine_dimension(const std::vector<Coords>& points, int ambient) {
  if (points.size() < 2) return 0;
  RationalMatrix m(static_cast<Eigen::Index>(points.size() - 1), ambient);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (int k = 0; k < ambient; ++k) m(static_cast<Eigen::Index>(i - 1), k) = points[i][k] - points[0][k];
  return static_cast<int>(row_reduce(m).size());
}

// Is p a convex combination of the given points?
bool in_hull(const std::vector<Coords>& generators, const Coords& p, int ambient) {
  if (generators.empty()) return false;
  const auto n = static_cast<Eigen::Index>(generators.size());
  RationalMatrix a(ambient + 1, n);
  Vector<Rational> b(ambient + 1);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (int k = 0; k < ambient; ++k) a(k, j) = generators[j][k];
    a(ambient, j) = 1;
  }
  for (int k = 0; k < ambient; ++k) b(k) = p[k];
  b(ambient) = 1;
  const Vector<Rational> c = Vector<Rational>::Zero(n);
  return LinearProgram<Rational>(a, b, c).solve().status == LpStatus::Optimal;
}

// Angular order around the origin starting at the positive x axis.
bool angle_less(const Coords& u, const Coords& v) {
  auto half = [](const Coords& w) { return (w[1] > 0 || (w[1] == 0 && w[0] > 0)) ? 0 : 1; };
  if (half(u) != half(v)) return half(u) < half(v);
  return u[0] * v[1] - u[1] * v[0] > 0;
}

void build_polygon(DualBall& ball) {
  const auto k = static_cast<std::int64_t>(ball.extreme.size());
  Coords sum(2, 0);
  for (const auto& p : ball.extreme) {
    sum[0] += p[0];
    sum[1] += p[1];
  }
  // Positions relative to the centroid, scaled by k to stay integral.
  std::vector<std::pair<Coords, Coords>> rel;
  for (const auto& p : ball.extreme) rel.push_back({{k * p[0] - sum[0], k * p[1] - sum[1]}, p});
  std::sort(rel.begin(), rel.end(), [](const auto& x, const auto& y) { return angle_less(x.first, y.first); });
  ball.polygon.clear();
  for (const auto& r : rel) ball.polygon.push_back(r.second);
  Integer twice = 0;
  for (std::size_t i = 0; i < ball.polygon.size(); ++i) {
    const auto& p = ball.polygon[i];
    const auto& q = ball.polygon[(i + 1) % ball.polygon.size()];
    twice += Integer(p[0]) * q[1] - Integer(p[1]) * q[0];
  }
  ball.area = Rational(abs(twice)) / 2;
}

}  // namespace

std::shared_ptr<const EulerianSet> eulerian_classes(const WallSystemMap& map, const HomologyBasis& basis,
                                                    const EnumerationLimits& limits) {
  const std::string key = cache_key(map, basis);
  {
    std::lock_guard lock(cache_mutex);
    if (const auto it = class_cache.find(key); it != class_cache.end()) return it->second;
  }
  EnumerationOptions options;
  options.limits = limits;
  auto set = std::make_shared<EulerianSet>(enumerate_eulerian(map, basis, options));
  set->require_complete();
  std::lock_guard lock(cache_mutex);
  class_cache.emplace(key, set);
  return set;
}

void clear_class_cache() {
  std::lock_guard lock(cache_mutex);
  class_cache.clear();
}

NormValue norm_over(const std::vector<Coords>& points, const Coords& a) {
  if (points.empty()) throw Error(ErrorKind::DegenerateBall, "no Eulerian classes to maximize over");
  NormValue best;
  bool first = true;
  for (const auto& p : points) {
    if (p.size() != a.size()) {
      throw Error(ErrorKind::MalformedInput, "class has " + std::to_string(a.size()) + " coordinates, expected " +
                                                 std::to_string(p.size()));
    }
    const std::int64_t v = dot(p, a);
    if (first || v > best.value || (v == best.value && p < best.witness)) {
      best = {v, p};
      first = false;
    }
  }
  return best;
}

NormValue norm(const WallSystemMap& map, const HomologyBasis& basis, const Coords& a,
               const EnumerationLimits& limits) {
  const auto set = eulerian_classes(map, basis, limits);
  std::vector<Coords> points;
  for (const auto& [cls, count] : set->classes) points.push_back(cls);
  return norm_over(points, a);
}

Rational norm_rational(const WallSystemMap& map, const HomologyBasis& basis, const std::vector<Rational>& a,
                       const EnumerationLimits& limits) {
  const auto set = eulerian_classes(map, basis, limits);
  std::optional<Rational> best;
  for (const auto& [cls, count] : set->classes) {
    if (cls.size() != a.size()) throw Error(ErrorKind::MalformedInput, "wrong number of coordinates");
    Rational v = 0;
    for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * cls[i];
    if (!best || v > *best) best = v;
  }
  if (!best) throw Error(ErrorKind::DegenerateBall, "no Eulerian classes to maximize over");
  return *best;
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::Outside: return "outside";
    case Membership::Boundary: return "boundary";
    case Membership::Interior: return "interior";
  }
  return "?";
}

DualBall dual_ball_from_points(std::vector<Coords> points, int ambient) {
  if (points.empty()) throw Error(ErrorKind::DegenerateBall, "empty class set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  DualBall ball;
  ball.ambient = ambient;
  ball.points = std::move(points);
  ball.dim = affine_dimension(ball.points, ambient);
  for (std::size_t i = 0; i < ball.points.size(); ++i) {
    std::vector<Coords> others;
    others.reserve(ball.points.size() - 1);
    for (std::size_t j = 0; j < ball.points.size(); ++j)
      if (j != i) others.push_back(ball.points[j]);
    if (!in_hull(others, ball.points[i], ambient)) ball.extreme.push_back(ball.points[i]);
  }
  if (ambient == 2 && ball.dim == 2) build_polygon(ball);
  return ball;
}

DualBall dual_ball(const WallSystemMap& map, const HomologyBasis& basis, const EnumerationLimits& limits) {
  const auto set = eulerian_classes(map, basis, limits);
  std::vector<Coords> points;
  for (const auto& [cls, count] : set->classes) points.push_back(cls);
  return dual_ball_from_points(std::move(points), basis.rank());
}

Membership contains(const DualBall& ball, const Coords& p) {
  if (ball.dim < ball.ambient || ball.extreme.empty()) {
    throw Error(ErrorKind::DegenerateBall, "ball has dimension " + std::to_string(ball.dim) + " in R^" +
                                               std::to_string(ball.ambient));
  }
  if (static_cast<int>(p.size()) != ball.ambient) throw Error(ErrorKind::MalformedInput, "wrong number of coordinates");
  // Maximize t over lambda_i = t + mu_i, mu >= 0; variables (t, mu_1..mu_N).
  const auto n = static_cast<Eigen::Index>(ball.extreme.size());
  const int d = ball.ambient;
  RationalMatrix a = RationalMatrix::Zero(d + 1, n + 1);
  Vector<Rational> b(d + 1);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (int k = 0; k < d; ++k) {
      a(k, j + 1) = ball.extreme[j][k];
      a(k, 0) += ball.extreme[j][k];
    }
    a(d, j + 1) = 1;
  }
  a(d, 0) = Rational(n);
  for (int k = 0; k < d; ++k) b(k) = p[k];
  b(d) = 1;
  Vector<Rational> c = Vector<Rational>::Zero(n + 1);
  c(0) = 1;
  const auto result = LinearProgram<Rational>(a, b, c).solve();
  if (result.status != LpStatus::Optimal) return Membership::Outside;
  return result.value > 0 ? Membership::Interior : Membership::Boundary;
}

std::int64_t facet_count(const DualBall& ball, std::int64_t max_subsets) {
  const int d = ball.ambient;
  if (ball.dim < d) throw Error(ErrorKind::DegenerateBall, "facets of a lower-dimensional ball");
  if (d == 2) return static_cast<std::int64_t>(ball.polygon.size());
  const int k = static_cast<int>(ball.extreme.size());
  std::set<std::pair<Coords, std::int64_t>> facets;
  std::vector<int> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  std::int64_t visited = 0;
  while (true) {
    if (++visited > max_subsets) throw Error(ErrorKind::ResourceLimit, "too many candidate facet subsets");
    // Normal of the hyperplane through the chosen points.
    RationalMatrix m(d - 1, d);
    const Coords& base = ball.extreme[pick[0]];
    for (int r = 1; r < d; ++r)
      for (int col = 0; col < d; ++col) m(r - 1, col) = ball.extreme[pick[r]][col] - base[col];
    const auto pivots = row_reduce(m);
    if (static_cast<int>(pivots.size()) == d - 1) {
      int free_col = 0;
      while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
      Vector<Rational> normal = Vector<Rational>::Zero(d);
      normal(free_col) = 1;
      for (int r = 0; r < d - 1; ++r) normal(pivots[r]) = -m(r, free_col);
      // Clear denominators and make primitive.
      Integer lcm = 1;
      for (int i = 0; i < d; ++i) lcm = boost::multiprecision::lcm(lcm, denominator(normal(i)));
      Coords integral(d);
      std::int64_t g = 0;
      for (int i = 0; i < d; ++i) {
        integral[i] = to_int64(numerator(normal(i) * lcm));
        g = std::gcd(g, integral[i]);
      }
      for (auto& x : integral) x /= g;
      const std::int64_t offset = dot(integral, base);
      bool above = false, below = false;
      for (const auto& p : ball.extreme) {
        const std::int64_t v = dot(integral, p);
        above |= v > offset;
        below |= v < offset;
      }
      if (!(above && below)) {
        if (above) {
          for (auto& x : integral) x = -x;
          facets.insert({integral, -offset});
        } else {
          facets.insert({integral, offset});
        }
      }
    }
    // Next d-subset in lexicographic order.
    int i = d - 1;
    while (i >= 0 && pick[i] == k - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return static_cast<std::int64_t>(facets.size());
}

std::vector<Coords> bounding_box_points(const DualBall& ball) {
  const int d = ball.ambient;
  if (ball.extreme.empty()) return {};
  Coords lo = ball.extreme[0], hi = ball.extreme[0];
  for (const auto& p : ball.extreme) {
    for (int i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  std::vector<Coords> out;
  Coords cur = lo;
  while (true) {
    out.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[i] == hi[i]) {
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

}  // namespace wallnorm
