#include "tropsurf/bergman.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace tropsurf {

namespace mp = boost::multiprecision;

IntVec Basis::coords(const IntVec& v) const {
  if (static_cast<int>(v.size()) != n) throw DomainError("vector has the wrong dimension");
  // Solve [u_1 .. u_N] a = v.
  std::vector<std::vector<mp::cpp_rational>> a(n, std::vector<mp::cpp_rational>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = u[c + 1][r];
    a[r][n] = v[r];
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw DomainError("basis is singular");
    std::swap(a[piv], a[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mp::cpp_rational f = a[r][c] / a[c][c];
      for (int k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  IntVec out(n);
  for (int r = 0; r < n; ++r) {
    mp::cpp_rational x = a[r][n] / a[r][r];
    if (mp::denominator(x) != 1) throw DomainError("coordinates are not integral; not a lattice basis");
    out[r] = static_cast<long long>(mp::numerator(x));
  }
  return out;
}

Basis standard_basis(int n) {
  if (n < 2) throw DomainError("standard basis needs N >= 2");
  Basis b;
  b.n = n;
  b.u.assign(n + 1, IntVec(n, 0));
  for (int i = 1; i <= n; ++i) b.u[i][i - 1] = -1;
  b.u[0] = IntVec(n, 1);
  return b;
}

Basis make_basis(const std::vector<IntVec>& u1_to_un) {
  const int n = static_cast<int>(u1_to_un.size());
  if (n < 2) throw DomainError("basis needs N >= 2 vectors");
  std::vector<std::vector<mp::cpp_int>> m(n, std::vector<mp::cpp_int>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(u1_to_un[i].size()) != n) throw DomainError("basis vectors have the wrong dimension");
    for (int j = 0; j < n; ++j) m[i][j] = u1_to_un[i][j];
  }
  // Bareiss elimination for the determinant.
  mp::cpp_int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) throw DomainError("basis vectors are linearly dependent");
      std::swap(m[s], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  mp::cpp_int det = sign * m[n - 1][n - 1];
  if (det != 1 && det != -1) throw DomainError("basis determinant is not +-1");
  Basis b;
  b.n = n;
  b.u.assign(n + 1, IntVec(n, 0));
  for (int i = 1; i <= n; ++i) b.u[i] = u1_to_un[i - 1];
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < n; ++j) b.u[0][j] -= b.u[i][j];
  return b;
}

IntVec flat_direction(ElementSet flat, const Basis& basis) {
  IntVec v(basis.n, 0);
  for (int i : elements(flat)) {
    if (i > basis.n) throw DomainError("flat element beyond basis size");
    for (int j = 0; j < basis.n; ++j) v[j] += basis.u[i][j];
  }
  return v;
}

namespace {

MissingRay classify_from_counts(const Matroid& m, std::vector<std::vector<ElementSet>>& points_through) {
  const int n = m.size();
  points_through.assign(n, {});
  for (ElementSet p : m.flats(2))
    for (int i : elements(p)) points_through[i].push_back(p);
  for (int i = 0; i < n; ++i) {
    if (points_through[i].size() != 2) continue;
    int k = set_size(points_through[i][0]) - 1;
    int l = set_size(points_through[i][1]) - 1;
    if (k > l) std::swap(k, l);
    if (l == 1) return {MissingRayKind::FullPlane, 1, 1};
    if (k == 1) return {MissingRayKind::LineTimesR, k, l};
    return {MissingRayKind::BipartiteCone, k, l};
  }
  return {};
}

}  // namespace

MissingRay classify_missing_ray(const Matroid& m) {
  if (m.rank() != 3 || !m.is_simple()) throw DomainError("classification needs a simple rank-3 matroid");
  std::vector<std::vector<ElementSet>> pts;
  return classify_from_counts(m, pts);
}

std::string to_string(MissingRayKind k) {
  switch (k) {
    case MissingRayKind::None: return "none";
    case MissingRayKind::FullPlane: return "full-plane";
    case MissingRayKind::LineTimesR: return "line-times-R";
    case MissingRayKind::BipartiteCone: return "bipartite-cone";
  }
  return "?";
}

FanPlane build_fan(const Matroid& m, const Basis& basis) {
  if (m.rank() != 3) throw DomainError("Bergman fans are built for rank-3 matroids only");
  if (!m.is_simple()) throw DomainError("Bergman fan input must be a simple matroid");
  if (m.size() != basis.n + 1) throw DomainError("ambient dimension must be the element count minus one");
  FanPlane p;
  p.dim = basis.n;
  p.matroid = m;
  p.basis = basis;

  std::vector<std::vector<ElementSet>> points_through;
  classify_from_counts(m, points_through);

  auto add_fine = [&](ElementSet flat, int rank) {
    IntVec d = flat_direction(flat, basis);
    if (gcd_of(d) != 1) throw DomainError("ray direction " + vec_to_string(d) + " is not primitive");
    p.fine_rays.push_back({flat, rank, d});
  };
  for (ElementSet l : m.flats(1)) add_fine(l, 1);
  for (ElementSet q : m.flats(2)) add_fine(q, 2);
  const int nl = static_cast<int>(m.flats(1).size());
  const int nf = static_cast<int>(p.fine_rays.size());

  std::vector<std::vector<int>> adj(nf);
  for (int j = nl; j < nf; ++j)
    for (int i = 0; i < nl; ++i)
      if (is_subset(p.fine_rays[i].flat, p.fine_rays[j].flat)) {
        p.fine_cones.push_back({i, j});
        adj[i].push_back(j);
        adj[j].push_back(i);
      }

  p.retained.assign(nf, -1);
  for (int f = 0; f < nf; ++f) {
    const FanRay& r = p.fine_rays[f];
    bool pruned = (r.flat_rank == 2) ? set_size(r.flat) == 2 : points_through[elements(r.flat)[0]].size() == 2;
    if (!pruned) {
      p.retained[f] = static_cast<int>(p.rays.size());
      p.rays.push_back(r);
    }
  }

  std::set<std::tuple<int, int, std::vector<int>>> seen;
  for (int f = 0; f < nf; ++f) {
    if (p.retained[f] < 0) continue;
    for (int start : adj[f]) {
      std::vector<int> via;
      int prev = f, cur = start;
      while (p.retained[cur] < 0) {
        via.push_back(cur);
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
      }
      int a = p.retained[f], b = p.retained[cur];
      std::vector<int> rev(via.rbegin(), via.rend());
      if (a > b || (a == b && rev < via)) continue;
      if (!seen.insert({a, b, via}).second) continue;
      p.faces.push_back({a, b, via});
    }
  }
  return p;
}

bool in_cone(const IntVec& x, const IntVec& y, const IntVec& v) {
  using i128 = __int128;
  const std::size_t n = v.size();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) {
      i128 det = i128(x[r]) * y[s] - i128(x[s]) * y[r];
      if (det == 0) continue;
      i128 an = i128(v[r]) * y[s] - i128(v[s]) * y[r];
      i128 bn = i128(x[r]) * v[s] - i128(x[s]) * v[r];
      for (std::size_t k = 0; k < n; ++k)
        if (i128(v[k]) * det != an * x[k] + bn * y[k]) return false;
      if (det < 0) an = -an, bn = -bn;
      return an >= 0 && bn >= 0;
    }
  // x and y are parallel: test v against each ray separately.
  auto on_ray = [&](const IntVec& w) {
    std::size_t r = 0;
    while (r < n && w[r] == 0) ++r;
    if (r == n) return is_zero(v);
    for (std::size_t k = 0; k < n; ++k)
      if (i128(v[k]) * w[r] != i128(v[r]) * w[k]) return false;
    return (v[r] > 0) == (w[r] > 0) || v[r] == 0;
  };
  return on_ray(x) || on_ray(y);
}

bool fan_contains(const FanPlane& p, const IntVec& v) {
  if (static_cast<int>(v.size()) != p.dim) throw DomainError("vector dimension differs from the fan");
  if (is_zero(v)) return true;
  for (auto [a, b] : p.fine_cones)
    if (in_cone(p.fine_rays[a].dir, p.fine_rays[b].dir, v)) return true;
  return false;
}

LinkGraph link_graph(const FanPlane& p) {
  LinkGraph g;
  for (const FanRay& r : p.rays)
    g.labels.push_back((r.flat_rank == 1 ? "line " : "point ") + set_to_string(r.flat));
  for (const FanFace& f : p.faces) g.edges.push_back({f.a, f.b});
  return g;
}

int edge_count(const FanPlane& p) { return static_cast<int>(p.rays.size()); }
int face_count(const FanPlane& p) { return static_cast<int>(p.faces.size()); }

long long sigma(const FanPlane& p, int ray) {
  if (ray < 0 || ray >= edge_count(p)) throw DomainError("ray index out of range");
  IntVec s(p.dim, 0);
  for (const FanFace& f : p.faces) {
    if (f.a == ray)
      for (int j = 0; j < p.dim; ++j) s[j] -= p.rays[f.b].dir[j];
    if (f.b == ray)
      for (int j = 0; j < p.dim; ++j) s[j] -= p.rays[f.a].dir[j];
  }
  const IntVec& v = p.rays[ray].dir;
  int r = 0;
  while (v[r] == 0) ++r;
  if (s[r] % v[r] != 0) throw DomainError("face sum is not an integer multiple of the ray");
  long long q = s[r] / v[r];
  for (int j = 0; j < p.dim; ++j)
    if (s[j] != q * v[j]) throw DomainError("face sum is not proportional to the ray; input is not matroidal");
  return q;
}

namespace {

// Flat of a standard-basis direction: -1_I for 0 not in I, +1_{[N] \ I} otherwise.
ElementSet flat_of_standard_direction(const IntVec& v) {
  const int n = static_cast<int>(v.size());
  bool neg = false, pos = false;
  for (long long x : v) {
    if (x == -1) neg = true;
    else if (x == 1) pos = true;
    else if (x != 0) throw DomainError("ray " + vec_to_string(v) + " is not an indicator combination of basis vectors");
  }
  if (neg && pos) throw DomainError("ray " + vec_to_string(v) + " mixes signs");
  if (!neg && !pos) throw DomainError("zero ray");
  ElementSet I = 0;
  if (neg) {
    for (int j = 0; j < n; ++j)
      if (v[j] == -1) I |= singleton(j + 1);
  } else {
    I = singleton(0);
    for (int j = 0; j < n; ++j)
      if (v[j] == 0) I |= singleton(j + 1);
  }
  return I;
}

}  // namespace

Matroid reconstruct_matroid(int dim, const std::vector<IntVec>& rays, const std::vector<std::pair<int, int>>& cones,
                            const std::optional<Basis>& basis) {
  if (dim < 2) throw DomainError("fan dimension must be at least 2");
  if (basis && basis->n != dim) throw DomainError("basis dimension differs from the fan");
  std::vector<IntVec> std_rays;
  for (const IntVec& v : rays) {
    if (static_cast<int>(v.size()) != dim) throw DomainError("ray " + vec_to_string(v) + " has the wrong dimension");
    if (basis) {
      IntVec a = basis->coords(v);
      for (auto& x : a) x = -x;
      std_rays.push_back(a);
    } else {
      std_rays.push_back(v);
    }
  }
  std::vector<ElementSet> points;
  std::set<ElementSet> flats_seen;
  for (const IntVec& v : std_rays) {
    ElementSet I = flat_of_standard_direction(v);
    if (!flats_seen.insert(I).second) throw DomainError("ray " + vec_to_string(v) + " repeated");
    if (set_size(I) == 2) throw DomainError("ray " + vec_to_string(v) + " is a subdividing ray of a coarse face");
    if (set_size(I) >= 3) points.push_back(I);
  }
  Matroid m = from_lines(dim + 1, points);

  // The candidate must reproduce the input exactly.
  FanPlane p = build_fan(m, standard_basis(dim));
  std::multiset<IntVec> want_rays(std_rays.begin(), std_rays.end()), got_rays;
  for (const FanRay& r : p.rays) got_rays.insert(r.dir);
  if (want_rays != got_rays) throw DomainError("rays are inconsistent with any matroid fan");
  auto key = [](IntVec a, IntVec b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
  std::multiset<std::pair<IntVec, IntVec>> want_cones, got_cones;
  for (auto [i, j] : cones) {
    if (i < 0 || j < 0 || i >= static_cast<int>(std_rays.size()) || j >= static_cast<int>(std_rays.size()))
      throw DomainError("cone refers to a missing ray");
    want_cones.insert(key(std_rays[i], std_rays[j]));
  }
  for (const FanFace& f : p.faces) got_cones.insert(key(p.rays[f.a].dir, p.rays[f.b].dir));
  if (want_cones != got_cones) throw DomainError("cones are inconsistent with the matroid read off the rays");
  return m;
}

bool has_saturated_triangle(const Matroid& m) {
  if (m.rank() != 3 || !m.is_simple()) throw DomainError("saturated triangles need a simple rank-3 matroid");
  const int n = m.size();
  const ElementSet E = m.ground();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        ElementSet I = m.closure(singleton(j) | singleton(k));
        ElementSet J = m.closure(singleton(i) | singleton(k));
        ElementSet K = m.closure(singleton(i) | singleton(j));
        if (I == J) continue;  // collinear
        if ((I | J | K) == E) return true;
      }
  return false;
}

}  // namespace tropsurf
