#include "wallnorm/oracle.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <optional>
#include <queue>

#include "wallnorm/cover.hpp"
#include "wallnorm/error.hpp"
#include "wallnorm/normball.hpp"

namespace wallnorm {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

std::int64_t inf_norm(const Coords& a) {
  std::int64_t m = 0;
  for (const auto x : a) m = std::max(m, x < 0 ? -x : x);
  return m;
}

// Shortest single cycles for every class in the box, plus the multicurve DP.
class Truncation {
 public:
  Truncation(const WallSystemMap& map, const HomologyBasis& basis, int radius)
      : box_(map.face_count(), basis.rank(), radius), classes_(1, basis.rank(), radius) {
    const auto steps = lifted_steps(map, basis);
    const Coords zero(basis.rank(), 0);
    for (int f = 0; f < map.face_count(); ++f) searches_.push_back(cover_bfs(box_, steps, box_.index(f, zero)));
    const auto n = static_cast<std::size_t>(classes_.size());
    single_.assign(n, kInf);
    single_face_.assign(n, -1);
    for (std::int64_t c = 0; c < classes_.size(); ++c) {
      const Coords h = classes_.coords_of(c);
      for (int f = 0; f < map.face_count(); ++f) {
        const auto d = searches_[f].distance[box_.index(f, h)];
        if (d >= 0 && d < single_[c]) {
          single_[c] = d;
          single_face_[c] = f;
        }
      }
    }
    single_[classes_.index(0, zero)] = 0;
    zero_ = classes_.index(0, zero);
  }

  const CoverBox& classes() const { return classes_; }
  std::int64_t single(std::int64_t c) const { return single_[c]; }
  std::int64_t value(std::int64_t c) const { return best_[c]; }

  DualWalk single_walk(std::int64_t c) const {
    const int f = single_face_[c];
    return searches_[f].path_to(box_.index(f, classes_.coords_of(c)));
  }

  // Decomposition DP M(c) = min(L(c), M(c1) + M(c - c1)), solved in order of
  // increasing value: both parts of an optimal split are final before c.
  // Stops once every target is final.
  void solve(const std::vector<std::int64_t>& targets) {
    const auto n = static_cast<std::size_t>(classes_.size());
    best_ = single_;
    split_.assign(n, {-1, -1});
    std::vector<char> final(n, 0);
    std::vector<std::int64_t> done;
    using Entry = std::pair<std::int64_t, std::int64_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (std::size_t c = 0; c < n; ++c)
      if (best_[c] < kInf) queue.push({best_[c], static_cast<std::int64_t>(c)});
    std::size_t pending = 0;
    std::vector<char> wanted(n, 0);
    for (const auto t : targets) {
      if (wanted[t]) continue;
      wanted[t] = 1;
      ++pending;
    }
    const int dim = classes_.dim();
    Coords sum(dim);
    while (!queue.empty() && pending > 0) {
      const auto [v, c] = queue.top();
      queue.pop();
      if (final[c] || v != best_[c]) continue;
      final[c] = 1;
      if (wanted[c]) --pending;
      if (c == zero_) continue;
      done.push_back(c);
      const Coords hc = classes_.coords_of(c);
      for (const auto other : done) {
        const Coords ho = classes_.coords_of(other);
        for (int i = 0; i < dim; ++i) sum[i] = hc[i] + ho[i];
        if (!classes_.contains(sum)) continue;
        const auto s = classes_.index(0, sum);
        const std::int64_t candidate = best_[c] + best_[other];
        if (candidate < best_[s]) {
          best_[s] = candidate;
          split_[s] = {c, other};
          queue.push({candidate, s});
        }
      }
    }
    final_ = std::move(final);
  }

  bool reached(std::int64_t c) const { return final_[c] != 0; }

  void expand(std::int64_t c, std::vector<std::int64_t>& parts) const {
    if (c == zero_) return;
    if (split_[c].first < 0) {
      parts.push_back(c);
      return;
    }
    expand(split_[c].first, parts);
    expand(split_[c].second, parts);
  }

 private:
  CoverBox box_;
  CoverBox classes_;
  std::vector<CoverSearch> searches_;
  std::vector<std::int64_t> single_;
  std::vector<int> single_face_;
  std::vector<std::int64_t> best_;
  std::vector<std::pair<std::int64_t, std::int64_t>> split_;
  std::vector<char> final_;
  std::int64_t zero_ = 0;
};

bool affordable(const WallSystemMap& map, const HomologyBasis& basis, int radius, const OracleOptions& options) {
  return radius <= options.max_radius &&
         CoverBox::state_count(map.face_count(), basis.rank(), radius + 1) <= options.max_states;
}

struct Stable {
  std::unique_ptr<Truncation> table;
  std::vector<std::int64_t> values;
  int radius;
};

// Runs the DP at H and H+1 for all targets, doubling H until the values agree.
Stable stable_values(const WallSystemMap& map, const HomologyBasis& basis, const std::vector<Coords>& targets,
                     int radius, const OracleOptions& options) {
  if (!affordable(map, basis, radius, options)) {
    throw Error(ErrorKind::ResourceLimit, "truncation radius " + std::to_string(radius) + " exceeds the limits");
  }
  auto evaluate = [&](int r) -> std::pair<std::unique_ptr<Truncation>, std::optional<std::vector<std::int64_t>>> {
    auto table = std::make_unique<Truncation>(map, basis, r);
    std::vector<std::int64_t> idx;
    for (const auto& a : targets) idx.push_back(table->classes().index(0, a));
    table->solve(idx);
    std::vector<std::int64_t> values;
    for (const auto i : idx) {
      if (!table->reached(i)) return {std::move(table), std::nullopt};
      values.push_back(table->value(i));
    }
    return {std::move(table), std::move(values)};
  };
  for (;;) {
    auto [table, values] = evaluate(radius);
    const bool can_grow = affordable(map, basis, 2 * radius, options);
    if (!values) {
      if (!can_grow) {
        throw Error(ErrorKind::BoxExceeded, "no multicurve of the requested class within radius " +
                                                std::to_string(radius));
      }
      radius *= 2;
      continue;
    }
    auto [next_table, next_values] = evaluate(radius + 1);
    if (next_values && *next_values == *values) return {std::move(table), std::move(*values), radius};
    if (!can_grow) {
      throw Error(ErrorKind::UnstableTruncation,
                  "oracle value still changes between radius " + std::to_string(radius) + " and " +
                      std::to_string(radius + 1));
    }
    radius *= 2;
  }
}

int default_radius(const HomologyBasis& basis, std::int64_t extent, const OracleOptions& options) {
  if (options.radius > 0) return std::max<int>(options.radius, static_cast<int>(extent));
  return static_cast<int>(extent) + 2 * (basis.rank() / 2) + 2;
}

void check_dimension(const HomologyBasis& basis, const Coords& a) {
  if (static_cast<int>(a.size()) != basis.rank()) {
    throw Error(ErrorKind::MalformedInput, "class has " + std::to_string(a.size()) + " coordinates, expected " +
                                               std::to_string(basis.rank()));
  }
}

}  // namespace

SingleCycle min_single_cycle(const WallSystemMap& map, const HomologyBasis& basis, const Coords& a, int radius) {
  check_dimension(basis, a);
  if (inf_norm(a) > radius) throw Error(ErrorKind::BoxExceeded, "class lies outside the truncation box");
  Truncation table(map, basis, radius);
  const auto c = table.classes().index(0, a);
  if (table.single(c) == kInf) {
    throw Error(ErrorKind::BoxExceeded, "no closed walk of class " + format_tuple(a) + " within radius " +
                                            std::to_string(radius));
  }
  if (inf_norm(a) == 0) return {0, {}};
  return {table.single(c), table.single_walk(c)};
}

MultiCurveResult min_multicurve(const WallSystemMap& map, const HomologyBasis& basis, const Coords& a,
                                const OracleOptions& options) {
  check_dimension(basis, a);
  const auto stable = stable_values(map, basis, {a}, default_radius(basis, inf_norm(a), options), options);
  MultiCurveResult out;
  out.value = stable.values[0];
  out.radius = stable.radius;
  std::vector<std::int64_t> parts;
  stable.table->expand(stable.table->classes().index(0, a), parts);
  out.certificate.total_class.assign(a.size(), 0);
  for (const auto p : parts) {
    CertificateCycle cycle{stable.table->single_walk(p), stable.table->classes().coords_of(p), stable.table->single(p)};
    out.certificate.total_length += cycle.length;
    for (std::size_t i = 0; i < a.size(); ++i) out.certificate.total_class[i] += cycle.cls[i];
    out.certificate.cycles.push_back(std::move(cycle));
  }
  return out;
}

VerifyReport verify_min_max(const WallSystemMap& map, const HomologyBasis& basis, int box_radius,
                              const OracleOptions& options) {
  const CoverBox query(1, basis.rank(), box_radius);
  std::vector<Coords> targets;
  for (std::int64_t c = 0; c < query.size(); ++c) targets.push_back(query.coords_of(c));
  // Lexicographic report order.
  std::sort(targets.begin(), targets.end());
  const auto stable = stable_values(map, basis, targets, default_radius(basis, box_radius, options), options);
  VerifyReport report;
  report.box_radius = box_radius;
  report.truncation_radius = stable.radius;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto formula = norm(map, basis, targets[i]).value;
    ++report.checked;
    report.values.push_back({targets[i], stable.values[i]});
    if (formula != stable.values[i]) report.discrepancies.push_back({targets[i], stable.values[i], formula});
  }
  return report;
}

}  // namespace wallnorm
