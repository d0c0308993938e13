#pragma once

#include <cstdint>
#include <vector>

#include "wallnorm/homology.hpp"
#include "wallnorm/numeric.hpp"
#include "wallnorm/surface_map.hpp"

namespace wallnorm {

/// Crossing a dual link out of a face, lifted to the maximal abelian cover:
/// the homology coordinate moves by `shift` (direction times cocycle weights).
struct LiftedStep {
  Crossing crossing;
  int target;
  Coords shift;
};

/// Steps leaving each face; steps[f] lists every crossing whose source is f.
std::vector<std::vector<LiftedStep>> lifted_steps(const WallSystemMap& map,
                                                  const HomologyBasis& basis);

/// States (face, h) of the abelian cover with |h|_inf <= radius, flattened.
class CoverBox {
 public:
  CoverBox(int faces, int dim, int radius);

  int faces() const { return faces_; }
  int dim() const { return dim_; }
  int radius() const { return radius_; }
  std::int64_t size() const { return static_cast<std::int64_t>(faces_) * cells_; }
  std::int64_t cells() const { return cells_; }

  bool contains(const Coords& h) const;
  std::int64_t index(int face, const Coords& h) const;
  int face_of(std::int64_t state) const { return static_cast<int>(state / cells_); }
  Coords coords_of(std::int64_t state) const;
  /// Index of the neighbour across `step`, or -1 when it leaves the box.
  std::int64_t neighbour(std::int64_t state, const LiftedStep& step) const;

  /// Number of states a box would have, saturating at INT64_MAX.
  static std::int64_t state_count(int faces, int dim, int radius);

 private:
  int faces_;
  int dim_;
  int radius_;
  std::int64_t side_;
  std::int64_t cells_;
};

/// Breadth-first search inside a CoverBox from one state.
struct CoverSearch {
  std::vector<std::int32_t> distance;     // -1 when unreachable
  std::vector<std::int64_t> parent;       // previous state, -1 at the root
  std::vector<Crossing> parent_crossing;  // crossing used to arrive

  /// Walk from the root to `state`.
  DualWalk path_to(std::int64_t state) const;
};

CoverSearch cover_bfs(const CoverBox& box, const std::vector<std::vector<LiftedStep>>& steps,
                      std::int64_t root);

}  // namespace wallnorm
