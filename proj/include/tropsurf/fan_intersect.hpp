#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tropsurf/fan_cycles.hpp"

namespace tropsurf {

struct CornerContribution {
  ElementSet point = 0;
  long long multiplicity = 0;
  bool operator==(const CornerContribution& o) const = default;
};

// Intersection multiplicity of the closures of two fan curves at the boundary
// point p_I. With |I| > 2 the projection pair (i, j) is searched in
// lexicographic order unless forced.
long long corner_multiplicity(const FanCycle& c1, const FanCycle& c2, ElementSet point, const FanPlane& p,
                              std::optional<std::pair<int, int>> force_pair = std::nullopt);

// Bilinear corner formula for projected rays (k1, k2) with weights, all in the
// positive orthant; directions need not be primitive.
long long corner_formula(const std::vector<std::pair<std::pair<long long, long long>, long long>>& a,
                         const std::vector<std::pair<std::pair<long long, long long>, long long>>& b);

struct IntersectionReport {
  long long vertex = 0;
  std::vector<CornerContribution> corners;  // sorted by point
  long long deg1 = 0;
  long long deg2 = 0;
  long long total = 0;
};

IntersectionReport intersect(const FanCycle& c1, const FanCycle& c2, const FanPlane& p);
long long vertex_multiplicity(const FanCycle& c1, const FanCycle& c2, const FanPlane& p);
long long bezout_total(const FanCycle& c1, const FanCycle& c2, const FanPlane& p);

// (N-2)^2 - sum over points of (|I|-2)^2, cross-checked against the local
// degree formula; throws on mismatch.
long long K_squared(const FanPlane& p);
// The local degree formula alone (lineality, bipartite and generic cases).
long long K_squared_local(const FanPlane& p);

// 2 - N + |Face| - |Edge|, cross-checked against the reduced characteristic polynomial.
long long c2_mult_fan(const FanPlane& p);

struct VertexSplit {
  long long before = 0;
  long long after_interior = 0;
  long long after_boundary = 0;
  int divisor_rays = 0;
};
VertexSplit modification_vertex_split(const Matroid& m, const std::vector<ElementSet>& through);

}  // namespace tropsurf
