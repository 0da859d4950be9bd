#include "tropsurf/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tropsurf {

namespace {

long long det2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

// 0 for arguments in [0, pi), 1 for [pi, 2 pi).
int half_plane(const Vec2& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

bool arg_less(const Vec2& a, const Vec2& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return det2(a, b) > 0;
}

std::string vec2_string(const Vec2& v) { return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")"; }

using CurveMap = std::map<std::string, LedgerCurve>;

CurveMap to_map(const Surface& x) {
  CurveMap m;
  for (const auto& c : x.ledger) m.emplace(c.id, c);
  return m;
}

std::vector<LedgerCurve> to_ledger(const CurveMap& m) {
  std::vector<LedgerCurve> out;
  for (const auto& [id, c] : m) out.push_back(c);
  return out;
}

// corner id -> ids of the curves with a leaf there, one entry per leaf
std::map<std::string, std::vector<std::string>> corner_users(const CurveMap& m) {
  std::map<std::string, std::vector<std::string>> u;
  for (const auto& [id, c] : m)
    for (const auto& corner : c.curve.leaves) u[corner].push_back(id);
  return u;
}

void rename_all(Surface& x, const std::string& prefix) {
  for (auto& c : x.ledger) {
    c.id = prefix + c.id;
    for (auto& l : c.curve.leaves) l = prefix + l;
  }
}

void remove_leaf(LedgerCurve& c, const std::string& corner) {
  auto it = std::find(c.curve.leaves.begin(), c.curve.leaves.end(), corner);
  if (it == c.curve.leaves.end()) throw DomainError("curve " + c.id + " has no leaf at corner " + corner);
  c.curve.leaves.erase(it);
}

std::vector<int> resolve_leaf_map(const std::vector<int>& leaf_map, int k) {
  if (leaf_map.empty()) {
    std::vector<int> id(k);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  if (static_cast<int>(leaf_map.size()) != k) throw DomainError("leaf map has the wrong length");
  std::vector<int> sorted = leaf_map;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < k; ++i)
    if (sorted[i] != i) throw DomainError("leaf map is not a permutation");
  return leaf_map;
}

void check_summable(const LedgerCurve& a, const LedgerCurve& b) {
  if (!a.snc || !b.snc) throw DomainError("summed curves must have simple normal crossings");
  if (!descriptors_isomorphic(a.curve, b.curve))
    throw DomainError("curves " + a.id + " and " + b.id + " are not isomorphic");
  if (a.self_intersection != -b.self_intersection)
    throw DomainError("self-intersections " + std::to_string(a.self_intersection) + " and " +
                      std::to_string(b.self_intersection) + " are not opposite");
}

// Removes c1 and c2 and joins the boundary curves that met them at matching
// leaves. Curves joined into one connected curve are merged.
CurveMap glue(CurveMap m, const std::string& id1, const std::string& id2, const std::vector<int>& leaf_map) {
  const LedgerCurve c1 = m.at(id1);
  const LedgerCurve c2 = m.at(id2);
  const int k = c1.curve.leaf_count();
  std::vector<int> pi = resolve_leaf_map(leaf_map, k);
  auto users = corner_users(m);

  auto other_at = [&](const std::string& corner, const std::string& self) {
    std::vector<std::string> rest = users[corner];
    auto it = std::find(rest.begin(), rest.end(), self);
    rest.erase(it);
    if (rest.size() != 1) throw DomainError("corner " + corner + " is not a simple normal crossing");
    return rest[0];
  };
  struct Join {
    std::string d1, p1, d2, p2;
  };
  std::vector<Join> joins;
  for (int i = 0; i < k; ++i) {
    const std::string& p1 = c1.curve.leaves[i];
    const std::string& p2 = c2.curve.leaves[pi[i]];
    std::string d1 = other_at(p1, id1), d2 = other_at(p2, id2);
    if (d1 == id2 || d2 == id1) throw DomainError("summed curves meet each other");
    if (d1 == id1 || d2 == id2) throw DomainError("a summed curve meets itself at a corner");
    joins.push_back({d1, p1, d2, p2});
  }
  m.erase(id1);
  m.erase(id2);

  std::map<std::string, std::string> parent;
  for (const auto& [id, c] : m) parent[id] = id;
  auto find = [&](std::string x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Join& j : joins) {
    remove_leaf(m.at(j.d1), j.p1);
    remove_leaf(m.at(j.d2), j.p2);
    std::string a = find(j.d1), b = find(j.d2);
    if (a != b) parent[a] = b;
  }
  std::map<std::string, std::vector<std::string>> comps;
  std::map<std::string, int> comp_joins;
  for (const auto& [id, c] : m) comps[find(id)].push_back(id);
  for (const Join& j : joins) ++comp_joins[find(j.d1)];

  CurveMap out;
  for (auto& [root, ids] : comps) {
    if (ids.size() == 1 && !comp_joins.count(root)) {
      out.emplace(ids[0], m.at(ids[0]));
      continue;
    }
    LedgerCurve merged;
    merged.self_intersection = 0;
    merged.snc = true;
    int b1 = 0;
    std::string name;
    for (const auto& id : ids) {
      const LedgerCurve& c = m.at(id);
      name += (name.empty() ? "" : "+") + id;
      merged.self_intersection += c.self_intersection;
      merged.snc = merged.snc && c.snc;
      b1 += c.curve.b1;
      merged.curve.valencies.insert(merged.curve.valencies.end(), c.curve.valencies.begin(), c.curve.valencies.end());
      merged.curve.leaves.insert(merged.curve.leaves.end(), c.curve.leaves.begin(), c.curve.leaves.end());
    }
    merged.id = name;
    // a curve with two leaves at one corner crosses itself there
    std::vector<std::string> corners = merged.curve.leaves;
    std::sort(corners.begin(), corners.end());
    if (std::adjacent_find(corners.begin(), corners.end()) != corners.end()) merged.snc = false;
    merged.curve.b1 = b1 + comp_joins[root] - (static_cast<int>(ids.size()) - 1);
    std::sort(merged.curve.valencies.begin(), merged.curve.valencies.end());
    validate_descriptor(merged.curve);
    out.emplace(merged.id, merged);
  }
  return out;
}

std::string fresh_prefix(const Surface& x, const std::string& stem) {
  for (int n = 1;; ++n) {
    std::string p = stem + std::to_string(n) + ".";
    bool used = false;
    for (const auto& c : x.ledger) {
      used |= c.id.find(p) != std::string::npos;
      for (const auto& l : c.curve.leaves) used |= l.find(p) != std::string::npos;
    }
    if (!used) return p;
  }
}

ExprPtr node(SurfaceExpr e) { return std::make_shared<const SurfaceExpr>(std::move(e)); }

}  // namespace

long long CurveDescriptor::K_C_degree() const {
  long long k = -static_cast<long long>(leaves.size());
  for (int v : valencies) k += v - 2;
  return k;
}

bool descriptors_isomorphic(const CurveDescriptor& a, const CurveDescriptor& b) {
  if (a.b1 != b.b1 || a.leaf_count() != b.leaf_count()) return false;
  auto core = [](const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v)
      if (x != 2) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
  };
  return core(a.valencies) == core(b.valencies);
}

void validate_descriptor(const CurveDescriptor& c) {
  if (c.b1 < 0) throw DomainError("negative first Betti number");
  for (int v : c.valencies)
    if (v < 2) throw DomainError("non-leaf vertex of valency " + std::to_string(v));
  if (c.K_C_degree() != 2LL * c.b1 - 2)
    throw DomainError("curve data is inconsistent: sum of (val - 2) is " + std::to_string(c.K_C_degree()) +
                      " but 2 b1 - 2 is " + std::to_string(2 * c.b1 - 2));
}

const LedgerCurve& Surface::curve(const std::string& id) const {
  for (const auto& c : ledger)
    if (c.id == id) return c;
  throw DomainError("no boundary curve with id " + id);
}

void validate_fan(const Fan2D& fan) {
  const int n = static_cast<int>(fan.rays.size());
  if (n < 3) throw DomainError("a complete fan needs at least 3 rays");
  for (const auto& v : fan.rays)
    if (std::gcd(v[0], v[1]) != 1) throw DomainError("ray " + vec2_string(v) + " is not primitive");
  int wraps = 0;
  for (int i = 0; i < n; ++i) {
    const Vec2& a = fan.rays[i];
    const Vec2& b = fan.rays[(i + 1) % n];
    long long d = det2(a, b);
    if (d != 1) {
      if (d == -1) throw DomainError("rays must be listed counterclockwise");
      throw DomainError("cone " + vec2_string(a) + "," + vec2_string(b) + " is not unimodular");
    }
    if (!arg_less(a, b)) ++wraps;
  }
  if (wraps != 1) throw DomainError("rays wind around the origin " + std::to_string(wraps) + " times");
}

std::vector<long long> toric_a_values(const Fan2D& fan) {
  validate_fan(fan);
  const int n = static_cast<int>(fan.rays.size());
  std::vector<long long> a(n);
  for (int i = 0; i < n; ++i) {
    const Vec2& p = fan.rays[(i + n - 1) % n];
    const Vec2& v = fan.rays[i];
    const Vec2& q = fan.rays[(i + 1) % n];
    Vec2 s = {p[0] + q[0], p[1] + q[1]};
    if (det2(s, v) != 0) throw DomainError("neighbours of " + vec2_string(v) + " do not sum to a multiple of it");
    a[i] = v[0] != 0 ? s[0] / v[0] : s[1] / v[1];
  }
  return a;
}

Fan2D star_subdivide(const Fan2D& fan, int i) {
  const int n = static_cast<int>(fan.rays.size());
  if (i < 0 || i >= n) throw DomainError("cone index out of range");
  Fan2D out = fan;
  const Vec2& a = fan.rays[i];
  const Vec2& b = fan.rays[(i + 1) % n];
  out.rays.insert(out.rays.begin() + i + 1, Vec2{a[0] + b[0], a[1] + b[1]});
  return out;
}

Fan2D projective_plane_fan() { return Fan2D{{{1, 0}, {0, 1}, {-1, -1}}}; }
Fan2D hirzebruch_fan(long long k) { return Fan2D{{{-1, 0}, {0, -1}, {1, k}, {0, 1}}}; }

Surface toric_surface(const Fan2D& fan) {
  std::vector<long long> a = toric_a_values(fan);
  const int n = static_cast<int>(a.size());
  Surface x;
  long long self_sum_sq = 0;
  CurveMap m;
  for (int i = 0; i < n; ++i) {
    LedgerCurve c;
    c.id = "D" + std::to_string(i);
    c.curve.leaves = {"c" + std::to_string((i + n - 1) % n), "c" + std::to_string(i)};
    c.curve.b1 = 0;
    c.self_intersection = -a[i];
    c.snc = true;
    self_sum_sq += c.self_intersection;
    m.emplace(c.id, c);
  }
  x.triple.chi = 1;
  x.triple.c2 = n;
  x.triple.K2 = self_sum_sq + 2LL * n;
  if (x.triple.K2 != 12 - n) throw DomainError("toric fan violates sum a_i = 3n - 12");
  x.ledger = to_ledger(m);
  SurfaceExpr e;
  e.kind = SurfaceExpr::Kind::Toric;
  e.fan = fan;
  x.expr = node(std::move(e));
  return x;
}

Surface tropical_sum(const Surface& x1, const std::string& c1, const Surface& x2, const std::string& c2,
                     const std::vector<int>& leaf_map) {
  const LedgerCurve& a = x1.curve(c1);
  const LedgerCurve& b = x2.curve(c2);
  check_summable(a, b);
  Surface l = x1, r = x2;
  rename_all(l, "a.");
  rename_all(r, "b.");
  CurveMap m = to_map(l);
  for (const auto& c : r.ledger) m.emplace(c.id, c);
  Surface x;
  x.ledger = to_ledger(glue(std::move(m), "a." + c1, "b." + c2, leaf_map));
  const long long K = a.curve.K_C_degree();
  x.triple.chi = x1.triple.chi + x2.triple.chi - (1 - a.curve.b1);
  x.triple.c2 = x1.triple.c2 + x2.triple.c2 + 2 * K;
  x.triple.K2 = x1.triple.K2 + x2.triple.K2 + 4 * K;
  SurfaceExpr e;
  e.kind = SurfaceExpr::Kind::Sum;
  e.left = x1.expr;
  e.right = x2.expr;
  e.curve1 = c1;
  e.curve2 = c2;
  e.leaf_map = leaf_map;
  x.expr = node(std::move(e));
  return x;
}

Surface self_sum(const Surface& x0, const std::string& c1, const std::string& c2, const std::vector<int>& leaf_map) {
  if (c1 == c2) throw DomainError("self-sum needs two distinct curves");
  const LedgerCurve& a = x0.curve(c1);
  const LedgerCurve& b = x0.curve(c2);
  check_summable(a, b);
  for (const auto& p : a.curve.leaves)
    if (std::find(b.curve.leaves.begin(), b.curve.leaves.end(), p) != b.curve.leaves.end())
      throw DomainError("curves " + c1 + " and " + c2 + " are not disjoint");
  Surface x;
  x.ledger = to_ledger(glue(to_map(x0), c1, c2, leaf_map));
  const long long K = a.curve.K_C_degree();
  x.triple.chi = x0.triple.chi - (1 - a.curve.b1);
  x.triple.c2 = x0.triple.c2 + 2 * K;
  x.triple.K2 = x0.triple.K2 + 4 * K;
  SurfaceExpr e;
  e.kind = SurfaceExpr::Kind::SelfSum;
  e.left = x0.expr;
  e.curve1 = c1;
  e.curve2 = c2;
  e.leaf_map = leaf_map;
  x.expr = node(std::move(e));
  return x;
}

Surface modify(const Surface& x0, const ModifySpec& spec) {
  if (!spec.locally_degree_1) throw DomainError("modification requires a curve of local degree 1");
  if (spec.id.empty() || spec.id.find('+') != std::string::npos) throw DomainError("invalid curve id for modification");
  CurveMap m = to_map(x0);
  if (m.count(spec.id)) throw DomainError("curve id " + spec.id + " already in the ledger");
  LedgerCurve c;
  c.id = spec.id;
  c.curve.valencies = spec.valencies;
  std::sort(c.curve.valencies.begin(), c.curve.valencies.end());
  c.curve.b1 = spec.b1;
  c.self_intersection = spec.self_intersection;
  c.snc = true;
  for (std::size_t k = 0; k < spec.hits.size(); ++k) {
    auto it = m.find(spec.hits[k]);
    if (it == m.end()) throw DomainError("modified curve ends on unknown boundary curve " + spec.hits[k]);
    std::string corner = spec.id + "#" + std::to_string(k);
    c.curve.leaves.push_back(corner);
    // The boundary curve picks up a leaf ending at the new corner, attached at a trivalent point.
    it->second.curve.leaves.push_back(corner);
    it->second.curve.valencies.push_back(3);
    std::sort(it->second.curve.valencies.begin(), it->second.curve.valencies.end());
  }
  validate_descriptor(c.curve);
  m.emplace(c.id, c);
  Surface x;
  x.triple = x0.triple;
  x.ledger = to_ledger(m);
  SurfaceExpr e;
  e.kind = SurfaceExpr::Kind::Modify;
  e.left = x0.expr;
  e.modify = spec;
  x.expr = node(std::move(e));
  return x;
}

Surface contract_minus_one(const Surface& x0, const std::string& id) {
  const LedgerCurve& E = x0.curve(id);
  if (E.curve.b1 != 0) throw DomainError("contracted curve must be rational (b1 = 0)");
  if (E.self_intersection != -1) throw DomainError("contracted curve must have self-intersection -1");
  if (!E.snc) throw DomainError("contracted curve must have simple normal crossings");
  const int k = E.curve.leaf_count();
  if (k < 2) throw DomainError("contracted curve needs at least two leaves");

  // Cone plane over a curve isomorphic to E, with the invariants of TP^2.
  const std::string pre = fresh_prefix(x0, "v");
  Surface v;
  v.triple = {1, 9, 3};
  CurveMap m;
  LedgerCurve L;
  L.id = pre + "L";
  L.curve.valencies = E.curve.valencies;
  L.curve.b1 = 0;
  L.self_intersection = 1;
  for (int i = 0; i < k; ++i) {
    std::string corner = pre + "l" + std::to_string(i);
    L.curve.leaves.push_back(corner);
    LedgerCurve A;
    A.id = pre + "A" + std::to_string(i);
    A.curve.leaves = {corner, pre + "y"};
    A.self_intersection = 1;
    A.snc = (k == 2);
    m.emplace(A.id, A);
  }
  m.emplace(L.id, L);
  CurveMap all = to_map(x0);
  for (auto& [cid, c] : m) all.emplace(cid, c);
  check_summable(E, L);

  Surface x;
  x.ledger = to_ledger(glue(std::move(all), id, L.id, {}));
  const long long K = E.curve.K_C_degree();
  x.triple.chi = x0.triple.chi + v.triple.chi - 1;
  x.triple.c2 = x0.triple.c2 + v.triple.c2 + 2 * K;
  x.triple.K2 = x0.triple.K2 + v.triple.K2 + 4 * K;
  SurfaceExpr e;
  e.kind = SurfaceExpr::Kind::Contract;
  e.left = x0.expr;
  e.curve1 = id;
  x.expr = node(std::move(e));
  return x;
}

Surface evaluate(const SurfaceExpr& e, const std::function<void(const SurfaceExpr&, const Surface&)>& visit) {
  auto child = [&](const ExprPtr& p) {
    if (!p) throw DomainError("expression node is missing a child");
    return evaluate(*p, visit);
  };
  Surface x;
  switch (e.kind) {
    case SurfaceExpr::Kind::Toric: x = toric_surface(e.fan); break;
    case SurfaceExpr::Kind::Sum: x = tropical_sum(child(e.left), e.curve1, child(e.right), e.curve2, e.leaf_map); break;
    case SurfaceExpr::Kind::SelfSum: x = self_sum(child(e.left), e.curve1, e.curve2, e.leaf_map); break;
    case SurfaceExpr::Kind::Modify: x = modify(child(e.left), e.modify); break;
    case SurfaceExpr::Kind::Contract: x = contract_minus_one(child(e.left), e.curve1); break;
  }
  if (visit) visit(e, x);
  return x;
}

Surface evaluate(const SurfaceExpr& e) { return evaluate(e, nullptr); }

NoetherReport noether_check(const Surface& x) {
  return {x.triple, 12 * x.triple.chi == x.triple.K2 + x.triple.c2};
}

AdjunctionReport adjunction_check(const Surface& x, const std::string& id) {
  const LedgerCurve& c = x.curve(id);
  CurveMap m = to_map(x);
  auto users = corner_users(m);
  AdjunctionReport r;
  r.id = id;
  r.b1 = c.curve.b1;
  r.self_intersection = c.self_intersection;
  for (int v : c.curve.valencies) r.k_interior += v - 2;
  for (const auto& corner : c.curve.leaves) {
    // valency of the leaf in the augmented graph: its own edge plus one per curve met there
    long long ends = static_cast<long long>(users[corner].size());
    r.k_interior += ends - 2;
    r.boundary_meetings += ends - 1;
  }
  r.k_dot_c = r.k_interior - r.self_intersection - r.boundary_meetings;
  r.twice_rhs = r.k_dot_c + r.self_intersection + 2;
  r.pass = (2LL * r.b1 == r.twice_rhs);
  return r;
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational signature_hypothesis(const Surface& x) {
  long long n = x.triple.K2 - 2 * x.triple.c2;
  long long g = std::gcd(n, 3LL);
  return {n / g, 3 / g};
}

}  // namespace tropsurf
