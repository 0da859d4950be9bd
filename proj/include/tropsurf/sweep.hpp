#pragma once

// Batch kernels over matroids, curve pairs and surface expressions. Each has a
// serial reference and an OpenMP version; both return identical records in
// identical order, since every task owns its own seed and slot.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tropsurf/fan_intersect.hpp"
#include "tropsurf/surface.hpp"

namespace tropsurf {

enum class Exec { Serial, Parallel };

// Random balanced curve in the plane: random rays in random fine cones, closed
// up by the positive decomposition of minus their sum.
FanCycle random_curve(const FanPlane& p, std::mt19937_64& rng, int max_rays = 3, int max_weight = 3,
                      int max_coef = 3);

// Every family of pairwise disjoint points, the empty family included.
std::vector<std::vector<ElementSet>> disjoint_point_families(const Matroid& m);

struct MatroidRecord {
  int n = 0;
  long long k2 = 0;
  long long k2_local = 0;
  long long c2_fan = 0;
  long long chi_bar_1 = 0;
  bool roundtrip = false;
  int extensions = 0;
  bool splits_ok = false;
  std::string error;
  bool operator==(const MatroidRecord& o) const = default;
};

std::vector<MatroidRecord> matroid_sweep(const std::vector<Matroid>& ms, Exec exec);
// All labeled simple rank-3 matroids on 3..max_n elements.
std::vector<Matroid> library_matroids(int max_n);

struct BezoutRecord {
  int fan = 0;
  FanCycle c1;
  FanCycle c2;
  IntersectionReport report;
  int resamples = 0;
  bool symmetric = false;
  bool bilinear = false;
  bool pair_independent = false;
  bool bezout = false;
  std::string error;
};

std::vector<BezoutRecord> bezout_sweep(const std::vector<FanPlane>& fans, int pairs_per_fan, std::uint64_t seed,
                                       Exec exec);

struct NoetherRecord {
  std::string expr;  // canonical JSON of the tree
  InvariantTriple triple;
  bool noether = false;
  bool adjunction = false;
  bool descriptors = false;
  bool additivity = false;
  std::string error;
  bool operator==(const NoetherRecord& o) const = default;
};

// Random construction trees over toric bases using sums, self-sums and modifications.
Surface random_surface(std::mt19937_64& rng, int depth);
std::vector<NoetherRecord> noether_sweep(int trees, std::uint64_t seed, Exec exec);

}  // namespace tropsurf
