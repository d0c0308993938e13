#pragma once

#include <cstdint>
#include <vector>

#include "wallnorm/homology.hpp"
#include "wallnorm/numeric.hpp"
#include "wallnorm/surface_map.hpp"

namespace wallnorm {

/// Brute-force side of the norm: shortest closed dual walks found by BFS in
/// the truncated abelian cover, combined into multicurves by a decomposition
/// dynamic program over the class box.
struct OracleOptions {
  int radius = 0;       // truncation radius H; 0 picks |a|_inf + 2g + 2
  int max_radius = 64;  // escalation cap
  std::int64_t max_states = 40'000'000;
};

struct SingleCycle {
  std::int64_t length = 0;
  DualWalk walk;
};

/// Shortest closed dual walk of class exactly `a` inside the radius-H box.
/// Throws BoxExceeded when there is none.
SingleCycle min_single_cycle(const WallSystemMap& map, const HomologyBasis& basis, const Coords& a, int radius);

struct CertificateCycle {
  DualWalk walk;
  Coords cls;
  std::int64_t length = 0;
};

struct MultiCurveCertificate {
  std::vector<CertificateCycle> cycles;
  std::int64_t total_length = 0;
  Coords total_class;
};

struct MultiCurveResult {
  std::int64_t value = 0;
  MultiCurveCertificate certificate;
  int radius = 0;  // truncation radius that passed the stability check
};

/// Minimal crossing number over multicurves of class `a`. The value at radius
/// H must agree with H+1; otherwise H doubles up to the cap. Throws
/// BoxExceeded or UnstableTruncation.
MultiCurveResult min_multicurve(const WallSystemMap& map, const HomologyBasis& basis, const Coords& a,
                                const OracleOptions& options = {});

struct Discrepancy {
  Coords a;
  std::int64_t oracle = 0;
  std::int64_t formula = 0;
};

struct VerifyReport {
  int box_radius = 0;
  int truncation_radius = 0;
  std::int64_t checked = 0;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::pair<Coords, std::int64_t>> values;  // oracle value per class, box order
};

/// Compares the oracle against the max formula on every class with
/// |a|_inf <= box_radius.
VerifyReport verify_min_max(const WallSystemMap& map, const HomologyBasis& basis, int box_radius,
                              const OracleOptions& options = {});

}  // namespace wallnorm
