#pragma once

#include <vector>

#include "tropsurf/bergman.hpp"

namespace tropsurf {

struct CycleRay {
  IntVec dir;
  long long weight = 1;
  bool operator==(const CycleRay& o) const = default;
};

// Weighted fan 1-cycle: distinct primitive directions, nonzero weights,
// sorted by direction.
struct FanCycle {
  int dim = 0;
  std::vector<CycleRay> rays;
  bool operator==(const FanCycle& o) const = default;
};

// Validates and normalizes; equal directions are rejected, zero weights dropped.
FanCycle make_cycle(int dim, std::vector<CycleRay> rays);
// Merges equal directions and drops rays whose weights cancel.
FanCycle add_cycles(const FanCycle& a, const FanCycle& b);
FanCycle scale_cycle(const FanCycle& c, long long k);

bool is_balanced(const FanCycle& c);

// r(0..N) >= 0 with min entry 0 and sum r(i) u_i = v.
std::vector<long long> positive_decomposition(const IntVec& v, const Basis& basis);

long long deg_delta(const FanCycle& c, const Basis& basis);
// Minimum of deg_delta over the given bases that present the fan as a Bergman fan.
long long deg_over_bases(const FanCycle& c, const FanPlane& p, const std::vector<Basis>& bases);

bool lies_in(const FanPlane& p, const FanCycle& c);
FanCycle canonical_cycle(const FanPlane& p);

// Where the closure of a ray meets the boundary: the interior of the line H_i
// (flat = {i}, at_point = false) or the point p_I of a rank-2 flat I.
struct BoundaryPoint {
  bool at_point = false;
  ElementSet flat = 0;
  bool operator==(const BoundaryPoint& o) const = default;
};
BoundaryPoint boundary_point(const IntVec& dir, const FanPlane& p);

}  // namespace tropsurf
