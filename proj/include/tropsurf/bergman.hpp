#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropsurf/matroid.hpp"

namespace tropsurf {

// Lattice basis u_1..u_N of Z^N together with u_0 = -(u_1 + ... + u_N).
struct Basis {
  int n = 0;
  std::vector<IntVec> u;  // u[i] is u_i for i = 0..N

  // Coordinates a_1..a_N with v = sum a_i u_i; throws if not integral.
  IntVec coords(const IntVec& v) const;
  bool operator==(const Basis& o) const = default;
};

Basis standard_basis(int n);
// Builds a basis from u_1..u_N, checking that the determinant is +-1.
Basis make_basis(const std::vector<IntVec>& u1_to_un);

// u_I = sum of u_i over i in I.
IntVec flat_direction(ElementSet flat, const Basis& basis);

struct FanRay {
  ElementSet flat = 0;
  int flat_rank = 0;  // 1 for a line, 2 for a point
  IntVec dir;
};

// A 2-dimensional face of the coarse fan: two retained rays plus the pruned
// rays subdividing it, in order from a to b.
struct FanFace {
  int a = 0;
  int b = 0;
  std::vector<int> via;  // indices into fine_rays
};

struct FanPlane {
  int dim = 0;
  Matroid matroid{0, {{0}}};
  Basis basis;
  std::vector<FanRay> rays;                    // retained rays of the coarse structure
  std::vector<FanFace> faces;                  // coarse faces
  std::vector<FanRay> fine_rays;               // every line and point of the matroid
  std::vector<std::pair<int, int>> fine_cones; // flags line < point, as fine_rays indices
  std::vector<int> retained;                   // fine index -> coarse index or -1
};

FanPlane build_fan(const Matroid& m, const Basis& basis);

// Whether v lies in the support of the fan (exact cone test).
bool fan_contains(const FanPlane& p, const IntVec& v);
// Solve v = a*x + b*y with a, b >= 0 exactly.
bool in_cone(const IntVec& x, const IntVec& y, const IntVec& v);

struct LinkGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
};
LinkGraph link_graph(const FanPlane& p);

int edge_count(const FanPlane& p);
int face_count(const FanPlane& p);
// sigma(E) with sigma(E) v_E = -(sum over faces at E of the other ray).
long long sigma(const FanPlane& p, int ray);

enum class MissingRayKind { None, FullPlane, LineTimesR, BipartiteCone };
struct MissingRay {
  MissingRayKind kind = MissingRayKind::None;
  int k = 0;  // bipartite link K_{k+1, l+1}
  int l = 0;
};
MissingRay classify_missing_ray(const Matroid& m);
std::string to_string(MissingRayKind k);

// Rays and cones given as direction vectors and ray-index pairs. With a basis
// the rays are first rewritten in the standard basis.
Matroid reconstruct_matroid(int dim, const std::vector<IntVec>& rays, const std::vector<std::pair<int, int>>& cones,
                            const std::optional<Basis>& basis = std::nullopt);

bool has_saturated_triangle(const Matroid& m);

}  // namespace tropsurf
