#include "wallnorm/cover.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace wallnorm {

std::vector<std::vector<LiftedStep>> lifted_steps(const WallSystemMap& map,
                                                  const HomologyBasis& basis) {
  std::vector<std::vector<LiftedStep>> steps(map.face_count());
  for (int e = 0; e < map.edge_count(); ++e) {
    const Coords w = basis.link_weight(e);
    Coords minus = w;
    for (auto& x : minus) x = -x;
    steps[map.face_right(e)].push_back({{e, +1}, map.face_left(e), w});
    steps[map.face_left(e)].push_back({{e, -1}, map.face_right(e), minus});
  }
  return steps;
}

CoverBox::CoverBox(int faces, int dim, int radius)
    : faces_(faces), dim_(dim), radius_(radius), side_(2 * radius + 1), cells_(1) {
  for (int i = 0; i < dim_; ++i) cells_ *= side_;
}

std::int64_t CoverBox::state_count(int faces, int dim, int radius) {
  const auto max = std::numeric_limits<std::int64_t>::max();
  std::int64_t n = faces;
  for (int i = 0; i < dim; ++i) {
    if (n > max / (2 * radius + 1)) return max;
    n *= 2 * radius + 1;
  }
  return n;
}

bool CoverBox::contains(const Coords& h) const {
  return std::all_of(h.begin(), h.end(), [r = radius_](std::int64_t x) { return x >= -r && x <= r; });
}

std::int64_t CoverBox::index(int face, const Coords& h) const {
  std::int64_t idx = 0;
  for (int i = dim_ - 1; i >= 0; --i) idx = idx * side_ + (h[i] + radius_);
  return static_cast<std::int64_t>(face) * cells_ + idx;
}

Coords CoverBox::coords_of(std::int64_t state) const {
  Coords h(dim_);
  std::int64_t cell = state % cells_;
  for (int i = 0; i < dim_; ++i) {
    h[i] = cell % side_ - radius_;
    cell /= side_;
  }
  return h;
}

std::int64_t CoverBox::neighbour(std::int64_t state, const LiftedStep& step) const {
  std::int64_t cell = state % cells_;
  std::int64_t out = 0;
  std::int64_t stride = 1;
  for (int i = 0; i < dim_; ++i) {
    const std::int64_t x = cell % side_ - radius_ + step.shift[i];
    if (x < -radius_ || x > radius_) return -1;
    out += (x + radius_) * stride;
    stride *= side_;
    cell /= side_;
  }
  return static_cast<std::int64_t>(step.target) * cells_ + out;
}

DualWalk CoverSearch::path_to(std::int64_t state) const {
  DualWalk walk;
  while (parent[state] >= 0) {
    walk.push_back(parent_crossing[state]);
    state = parent[state];
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

CoverSearch cover_bfs(const CoverBox& box, const std::vector<std::vector<LiftedStep>>& steps,
                      std::int64_t root) {
  CoverSearch s;
  const auto n = static_cast<std::size_t>(box.size());
  s.distance.assign(n, -1);
  s.parent.assign(n, -1);
  s.parent_crossing.assign(n, Crossing{-1, 0});
  std::deque<std::int64_t> queue{root};
  s.distance[root] = 0;
  while (!queue.empty()) {
    const std::int64_t x = queue.front();
    queue.pop_front();
    for (const auto& step : steps[box.face_of(x)]) {
      const std::int64_t y = box.neighbour(x, step);
      if (y < 0 || s.distance[y] >= 0) continue;
      s.distance[y] = s.distance[x] + 1;
      s.parent[y] = x;
      s.parent_crossing[y] = step.crossing;
      queue.push_back(y);
    }
  }
  return s;
}

}  // namespace wallnorm
