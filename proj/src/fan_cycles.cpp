#include "tropsurf/fan_cycles.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace tropsurf {

FanCycle make_cycle(int dim, std::vector<CycleRay> rays) {
  if (dim < 1) throw DomainError("cycle dimension must be positive");
  FanCycle c;
  c.dim = dim;
  for (auto& r : rays) {
    if (static_cast<int>(r.dir.size()) != dim) throw DomainError("ray " + vec_to_string(r.dir) + " has the wrong dimension");
    if (is_zero(r.dir)) throw DomainError("zero ray direction");
    if (gcd_of(r.dir) != 1) throw DomainError("ray " + vec_to_string(r.dir) + " is not primitive");
    if (r.weight != 0) c.rays.push_back(std::move(r));
  }
  std::sort(c.rays.begin(), c.rays.end(), [](const CycleRay& a, const CycleRay& b) { return a.dir < b.dir; });
  for (std::size_t i = 1; i < c.rays.size(); ++i)
    if (c.rays[i].dir == c.rays[i - 1].dir) throw DomainError("direction " + vec_to_string(c.rays[i].dir) + " repeated");
  return c;
}

FanCycle add_cycles(const FanCycle& a, const FanCycle& b) {
  if (a.dim != b.dim) throw DomainError("cycles live in different dimensions");
  std::map<IntVec, long long> acc;
  for (const auto& r : a.rays) acc[r.dir] += r.weight;
  for (const auto& r : b.rays) acc[r.dir] += r.weight;
  std::vector<CycleRay> rays;
  for (auto& [d, w] : acc)
    if (w != 0) rays.push_back({d, w});
  return make_cycle(a.dim, std::move(rays));
}

FanCycle scale_cycle(const FanCycle& c, long long k) {
  std::vector<CycleRay> rays = c.rays;
  for (auto& r : rays) r.weight *= k;
  return make_cycle(c.dim, std::move(rays));
}

bool is_balanced(const FanCycle& c) {
  IntVec s(c.dim, 0);
  for (const auto& r : c.rays)
    for (int j = 0; j < c.dim; ++j) s[j] += r.weight * r.dir[j];
  return is_zero(s);
}

std::vector<long long> positive_decomposition(const IntVec& v, const Basis& basis) {
  if (is_zero(v)) throw DomainError("cannot decompose the zero vector");
  IntVec a = basis.coords(v);
  long long m = std::min(0LL, *std::min_element(a.begin(), a.end()));
  std::vector<long long> r(basis.n + 1);
  r[0] = -m;
  for (int i = 0; i < basis.n; ++i) r[i + 1] = a[i] - m;
  return r;
}

long long deg_delta(const FanCycle& c, const Basis& basis) {
  if (c.dim != basis.n) throw DomainError("cycle and basis dimensions differ");
  std::vector<long long> deg(basis.n + 1, 0);
  for (const auto& ray : c.rays) {
    auto r = positive_decomposition(ray.dir, basis);
    for (int i = 0; i <= basis.n; ++i) deg[i] += ray.weight * r[i];
  }
  for (int i = 1; i <= basis.n; ++i)
    if (deg[i] != deg[0]) throw DomainError("degree depends on the coordinate; cycle is not balanced");
  return deg[0];
}

long long deg_over_bases(const FanCycle& c, const FanPlane& p, const std::vector<Basis>& bases) {
  std::vector<IntVec> rays;
  std::vector<std::pair<int, int>> cones;
  for (const FanRay& r : p.rays) rays.push_back(r.dir);
  for (const FanFace& f : p.faces) cones.push_back({f.a, f.b});
  long long best = std::numeric_limits<long long>::max();
  bool any = false;
  for (const Basis& b : bases) {
    try {
      reconstruct_matroid(p.dim, rays, cones, b);
    } catch (const DomainError&) {
      continue;
    }
    best = std::min(best, deg_delta(c, b));
    any = true;
  }
  if (!any) throw DomainError("no candidate basis presents the fan as a Bergman fan");
  return best;
}

bool lies_in(const FanPlane& p, const FanCycle& c) {
  if (c.dim != p.dim) throw DomainError("cycle and fan dimensions differ");
  for (const auto& r : c.rays)
    if (!fan_contains(p, r.dir)) return false;
  return true;
}

FanCycle canonical_cycle(const FanPlane& p) {
  std::vector<long long> val(p.rays.size(), 0);
  for (const FanFace& f : p.faces) {
    ++val[f.a];
    ++val[f.b];
  }
  std::vector<CycleRay> rays;
  for (std::size_t i = 0; i < p.rays.size(); ++i) rays.push_back({p.rays[i].dir, val[i] - 2});
  return make_cycle(p.dim, std::move(rays));
}

BoundaryPoint boundary_point(const IntVec& dir, const FanPlane& p) {
  auto r = positive_decomposition(dir, p.basis);
  ElementSet I = 0;
  for (int i = 0; i <= p.basis.n; ++i)
    if (r[i] > 0) I |= singleton(i);
  if (set_size(I) == 1) return {false, I};
  if (p.matroid.flat_rank(I) != 2)
    throw DomainError("ray " + vec_to_string(dir) + " has support " + set_to_string(I) +
                      ", which is not a point of the matroid; the ray leaves the plane");
  return {true, I};
}

}  // namespace tropsurf
