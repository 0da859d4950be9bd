#include "tropsurf/fan_intersect.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tropsurf {

namespace {

struct Relevant {
  std::vector<long long> r;
  long long weight;
};

std::vector<Relevant> rays_at(const FanCycle& c, ElementSet point, const FanPlane& p) {
  std::vector<Relevant> out;
  for (const auto& ray : c.rays) {
    BoundaryPoint bp = boundary_point(ray.dir, p);
    if (bp.at_point && bp.flat == point) out.push_back({positive_decomposition(ray.dir, p.basis), ray.weight});
  }
  return out;
}

// For a ray with support I: the element f with r(f) above the common value, or
// -1 for the ray u_I itself, or -2 if the ray sits in no face cone(u_f, u_I).
int face_of(const std::vector<long long>& r, ElementSet I) {
  auto es = elements(I);
  long long low = r[es[0]];
  for (int e : es) low = std::min(low, r[e]);
  int above = -1;
  for (int e : es) {
    if (r[e] == low) continue;
    if (above != -1) return -2;
    above = e;
  }
  return above;
}

using Projected = std::vector<std::pair<std::pair<long long, long long>, long long>>;

Projected project(const std::vector<Relevant>& rays, int i, int j) {
  Projected out;
  for (const auto& x : rays) {
    long long k1 = x.r[i], k2 = x.r[j];
    long long g = std::gcd(k1, k2);
    if (g == 0) throw DomainError("projected ray degenerates to zero");
    out.push_back({{k1 / g, k2 / g}, x.weight * g});
  }
  return out;
}

}  // namespace

long long corner_formula(const Projected& a, const Projected& b) {
  long long total = 0;
  for (const auto& [ka, wa] : a)
    for (const auto& [kb, wb] : b) {
      if (ka.first < 0 || ka.second < 0 || kb.first < 0 || kb.second < 0)
        throw DomainError("projected directions must head into the corner");
      total += wa * wb * std::min(ka.first * kb.second, ka.second * kb.first);
    }
  return total;
}

long long corner_multiplicity(const FanCycle& c1, const FanCycle& c2, ElementSet point, const FanPlane& p,
                              std::optional<std::pair<int, int>> force_pair) {
  if (p.matroid.flat_rank(point) != 2) throw DomainError(set_to_string(point) + " is not a point of the plane");
  auto a = rays_at(c1, point, p);
  auto b = rays_at(c2, point, p);
  if (a.empty() || b.empty()) return 0;
  auto es = elements(point);
  auto valid = [&](int i, int j) {
    for (const auto* side : {&a, &b})
      for (const auto& x : *side) {
        int f = face_of(x.r, point);
        if (f == -2 || (f >= 0 && f != i && f != j)) return false;
      }
    return true;
  };
  if (force_pair) {
    auto [i, j] = *force_pair;
    if (!contains(point, i) || !contains(point, j) || i == j) throw DomainError("forced pair is not inside the point");
    if (!valid(i, j)) throw DomainError("forced pair does not cover every ray at the corner");
    return corner_formula(project(a, i, j), project(b, i, j));
  }
  for (std::size_t x = 0; x < es.size(); ++x)
    for (std::size_t y = x + 1; y < es.size(); ++y)
      if (valid(es[x], es[y])) return corner_formula(project(a, es[x], es[y]), project(b, es[x], es[y]));
  throw DomainError("no projection pair covers the rays at " + set_to_string(point));
}

IntersectionReport intersect(const FanCycle& c1, const FanCycle& c2, const FanPlane& p) {
  if (!lies_in(p, c1) || !lies_in(p, c2)) throw DomainError("curves must lie in the plane");
  if (!is_balanced(c1) || !is_balanced(c2)) throw DomainError("curves must be balanced");
  IntersectionReport rep;
  rep.deg1 = deg_delta(c1, p.basis);
  rep.deg2 = deg_delta(c2, p.basis);
  std::set<ElementSet> pts1, pts2;
  for (const auto& r : c1.rays)
    if (auto bp = boundary_point(r.dir, p); bp.at_point) pts1.insert(bp.flat);
  for (const auto& r : c2.rays)
    if (auto bp = boundary_point(r.dir, p); bp.at_point) pts2.insert(bp.flat);
  long long corner_sum = 0;
  for (ElementSet I : pts1) {
    if (!pts2.count(I)) continue;
    long long m = corner_multiplicity(c1, c2, I, p);
    rep.corners.push_back({I, m});
    corner_sum += m;
  }
  rep.total = rep.deg1 * rep.deg2;
  rep.vertex = rep.total - corner_sum;
  return rep;
}

long long vertex_multiplicity(const FanCycle& c1, const FanCycle& c2, const FanPlane& p) {
  return intersect(c1, c2, p).vertex;
}

long long bezout_total(const FanCycle& c1, const FanCycle& c2, const FanPlane& p) {
  IntersectionReport rep = intersect(c1, c2, p);
  long long sum = rep.vertex;
  for (const auto& c : rep.corners) sum += c.multiplicity;
  if (sum != rep.deg1 * rep.deg2) throw DomainError("vertex and corner contributions do not add up to deg * deg");
  return sum;
}

long long K_squared_local(const FanPlane& p) {
  const long long N = p.dim;
  const long long E = edge_count(p), F = face_count(p);
  switch (classify_missing_ray(p.matroid).kind) {
    case MissingRayKind::FullPlane:
    case MissingRayKind::LineTimesR:
      return 0;
    case MissingRayKind::BipartiteCone:
      return 8 - 4 * E + 2 * F;
    case MissingRayKind::None:
      break;
  }
  long long s = 0;
  for (int r = 0; r < E; ++r) s += sigma(p, r);
  return 10 + N - 5 * E + 2 * F - s;
}

long long K_squared(const FanPlane& p) {
  const long long N = p.dim;
  long long k2 = (N - 2) * (N - 2);
  for (ElementSet q : big_points(p.matroid)) k2 -= static_cast<long long>(set_size(q) - 2) * (set_size(q) - 2);
  long long local = K_squared_local(p);
  if (local != k2)
    throw DomainError("K^2 cross-check failed: " + std::to_string(k2) + " vs local formula " + std::to_string(local));
  return k2;
}

long long c2_mult_fan(const FanPlane& p) {
  long long v = 2 - p.dim + face_count(p) - edge_count(p);
  long long chi = c2_point_multiplicity(p.matroid);
  if (v != chi)
    throw DomainError("c2 multiplicity " + std::to_string(v) + " differs from the characteristic polynomial value " +
                      std::to_string(chi));
  return v;
}

VertexSplit modification_vertex_split(const Matroid& m, const std::vector<ElementSet>& through) {
  Matroid ext = extend_by_line(m, through);
  const int e = m.size();
  VertexSplit s;
  for (ElementSet q : ext.flats(2))
    if (contains(q, e)) ++s.divisor_rays;
  s.before = c2_point_multiplicity(m);
  s.after_interior = c2_point_multiplicity(ext);
  s.after_boundary = 2 - s.divisor_rays;
  if (s.before != s.after_interior + s.after_boundary)
    throw DomainError("c2 is not preserved by the modification");
  return s;
}

}  // namespace tropsurf
