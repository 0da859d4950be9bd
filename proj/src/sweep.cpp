#include "tropsurf/sweep.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "tropsurf/json_io.hpp"

namespace tropsurf {

namespace {

// splitmix64, so that neighbouring task indices get unrelated streams
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t task_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) { return mix(mix(seed ^ mix(a)) ^ b); }

template <class F>
void run_tasks(long long n, Exec exec, F&& f) {
  if (exec == Exec::Serial) {
    for (long long i = 0; i < n; ++i) f(i);
    return;
  }
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) f(i);
}

int pick(std::mt19937_64& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

MatroidRecord sweep_one(const Matroid& m) {
  MatroidRecord r;
  r.n = m.size();
  try {
    FanPlane p = build_fan(m, standard_basis(m.size() - 1));
    r.k2 = K_squared(p);
    r.k2_local = K_squared_local(p);
    r.c2_fan = c2_mult_fan(p);
    r.chi_bar_1 = c2_point_multiplicity(m);
    std::vector<IntVec> rays;
    for (const auto& ray : p.rays) rays.push_back(ray.dir);
    std::vector<std::pair<int, int>> cones;
    for (const auto& f : p.faces) cones.push_back({f.a, f.b});
    r.roundtrip = is_isomorphic(reconstruct_matroid(p.dim, rays, cones), m);
    r.splits_ok = true;
    for (const auto& family : disjoint_point_families(m)) {
      ++r.extensions;
      VertexSplit s = modification_vertex_split(m, family);
      Matroid ext = extend_by_line(m, family);
      int through = 0;
      for (ElementSet q : ext.flats(2)) through += contains(q, m.size());
      r.splits_ok = r.splits_ok && s.divisor_rays == through &&
                    r.chi_bar_1 == c2_point_multiplicity(ext) + (2 - through);
    }
  } catch (const DomainError& e) {
    r.error = e.what();
  }
  return r;
}

bool same_report(const IntersectionReport& a, const IntersectionReport& b) {
  return a.vertex == b.vertex && a.corners == b.corners && a.total == b.total;
}

void bezout_checks(BezoutRecord& r, const FanCycle& c3, const FanPlane& p) {
  r.report = intersect(r.c1, r.c2, p);
  IntersectionReport back = intersect(r.c2, r.c1, p);
  r.symmetric = same_report(r.report, back);
  long long sum = r.report.vertex;
  for (const auto& c : r.report.corners) sum += c.multiplicity;
  r.bezout = sum == r.report.deg1 * r.report.deg2 && bezout_total(r.c1, r.c2, p) == sum;
  // additivity in the first slot: c1 + c3 against c2
  FanCycle s = add_cycles(r.c1, c3);
  IntersectionReport a = intersect(c3, r.c2, p), t = intersect(s, r.c2, p);
  std::map<ElementSet, long long> corners;
  for (const auto* rep : {&r.report, &a})
    for (const auto& c : rep->corners) corners[c.point] += c.multiplicity;
  bool ok = t.vertex == r.report.vertex + a.vertex && t.total == r.report.total + a.total;
  for (const auto& c : t.corners) ok = ok && corners[c.point] == c.multiplicity;
  for (const auto& [pt, mult] : corners) {
    auto it = std::find_if(t.corners.begin(), t.corners.end(), [&](const auto& c) { return c.point == pt; });
    ok = ok && (it != t.corners.end() ? it->multiplicity == mult : mult == 0);
  }
  r.bilinear = ok;
  r.pair_independent = true;
  for (const auto& c : r.report.corners) {
    auto es = elements(c.point);
    for (std::size_t x = 0; x < es.size(); ++x)
      for (std::size_t y = x + 1; y < es.size(); ++y) {
        long long v;
        try {
          v = corner_multiplicity(r.c1, r.c2, c.point, p, std::pair<int, int>{es[x], es[y]});
        } catch (const DomainError&) {
          continue;  // this pair does not cover every ray at the corner
        }
        r.pair_independent = r.pair_independent && v == c.multiplicity;
      }
  }
}

// Surfaces for random trees.

Fan2D random_toric_fan(std::mt19937_64& rng) {
  Fan2D f = pick(rng, 2) == 0 ? projective_plane_fan() : hirzebruch_fan(pick(rng, 4));
  int blowups = pick(rng, 3);
  for (int i = 0; i < blowups; ++i) f = star_subdivide(f, pick(rng, static_cast<int>(f.rays.size())));
  return f;
}

bool toric_like(const LedgerCurve& c) {
  return c.snc && c.curve.b1 == 0 && c.curve.leaf_count() == 2 && descriptors_isomorphic(c.curve, {{}, {"", ""}, 0});
}

std::vector<int> random_leaf_map(std::mt19937_64& rng, int k) {
  std::vector<int> m(k);
  for (int i = 0; i < k; ++i) m[i] = i;
  std::shuffle(m.begin(), m.end(), rng);
  return m;
}

std::optional<Surface> try_sum(std::mt19937_64& rng, const Surface& x, const Surface& y) {
  std::vector<std::pair<std::string, std::string>> cands;
  for (const auto& a : x.ledger)
    for (const auto& b : y.ledger)
      if (a.snc && b.snc && a.self_intersection == -b.self_intersection && descriptors_isomorphic(a.curve, b.curve))
        cands.push_back({a.id, b.id});
  std::shuffle(cands.begin(), cands.end(), rng);
  for (const auto& [a, b] : cands) {
    try {
      return tropical_sum(x, a, y, b, random_leaf_map(rng, x.curve(a).curve.leaf_count()));
    } catch (const DomainError&) {
    }
  }
  return std::nullopt;
}

std::optional<Surface> try_self_sum(std::mt19937_64& rng, const Surface& x) {
  std::vector<std::pair<std::string, std::string>> cands;
  for (const auto& a : x.ledger)
    for (const auto& b : x.ledger)
      if (a.id < b.id && a.snc && b.snc && a.self_intersection == -b.self_intersection &&
          descriptors_isomorphic(a.curve, b.curve))
        cands.push_back({a.id, b.id});
  std::shuffle(cands.begin(), cands.end(), rng);
  for (const auto& [a, b] : cands) {
    try {
      return self_sum(x, a, b, random_leaf_map(rng, x.curve(a).curve.leaf_count()));
    } catch (const DomainError&) {
    }
  }
  return std::nullopt;
}

std::optional<Surface> try_modify(std::mt19937_64& rng, const Surface& x) {
  std::vector<std::string> ids;
  for (const auto& c : x.ledger) ids.push_back(c.id);
  if (ids.empty()) return std::nullopt;
  ModifySpec s;
  for (int n = 1;; ++n) {
    s.id = "M" + std::to_string(n);
    if (std::none_of(ids.begin(), ids.end(), [&](const auto& id) { return id == s.id; })) break;
  }
  int hits = 2 + pick(rng, 3);
  for (int k = 0; k < hits; ++k) s.hits.push_back(ids[pick(rng, static_cast<int>(ids.size()))]);
  // a rational curve: sum of (val - 2) over interior vertices is hits - 2
  for (int left = hits - 2; left > 0;) {
    int v = 1 + pick(rng, left);
    s.valencies.push_back(v + 2);
    left -= v;
  }
  if (pick(rng, 2)) s.valencies.push_back(2);
  s.self_intersection = pick(rng, 5) - 2;
  s.locally_degree_1 = true;
  try {
    return modify(x, s);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::optional<Surface> try_contract(std::mt19937_64& rng, const Surface& x) {
  std::vector<std::string> cands;
  for (const auto& c : x.ledger)
    if (c.snc && c.curve.b1 == 0 && c.self_intersection == -1 && c.curve.leaf_count() >= 2) cands.push_back(c.id);
  std::shuffle(cands.begin(), cands.end(), rng);
  for (const auto& id : cands) {
    try {
      return contract_minus_one(x, id);
    } catch (const DomainError&) {
    }
  }
  return std::nullopt;
}

// Sum with the Hirzebruch surface carrying the opposite self-intersection; always
// possible along a curve that looks like a toric boundary curve.
std::optional<Surface> sum_with_hirzebruch(std::mt19937_64& rng, const Surface& x) {
  std::vector<const LedgerCurve*> cands;
  for (const auto& c : x.ledger)
    if (toric_like(c) && c.self_intersection >= -6 && c.self_intersection <= 6) cands.push_back(&c);
  if (cands.empty()) return std::nullopt;
  const LedgerCurve& c = *cands[pick(rng, static_cast<int>(cands.size()))];
  long long s = c.self_intersection;
  Surface h = toric_surface(hirzebruch_fan(s < 0 ? -s : s));
  // D1 has self-intersection k and D3 has -k
  std::string target = s <= 0 ? "D1" : "D3";
  try {
    return tropical_sum(x, c.id, h, target, random_leaf_map(rng, 2));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

bool uses_operations(const SurfaceExpr& e) {
  if (e.kind == SurfaceExpr::Kind::Sum || e.kind == SurfaceExpr::Kind::SelfSum || e.kind == SurfaceExpr::Kind::Modify)
    return true;
  return (e.left && uses_operations(*e.left)) || (e.right && uses_operations(*e.right));
}

long long sig3(const InvariantTriple& t) { return t.K2 - 2 * t.c2; }

NoetherRecord noether_one(std::uint64_t seed) {
  NoetherRecord r;
  try {
    std::mt19937_64 rng(seed);
    Surface x = random_surface(rng, 2 + pick(rng, 3));
    r.expr = expr_to_json(*x.expr).dump();
    r.triple = x.triple;
    r.noether = noether_check(x).pass;
    r.adjunction = true;
    r.descriptors = true;
    for (const auto& c : x.ledger) {
      r.adjunction = r.adjunction && adjunction_check(x, c.id).pass;
      try {
        validate_descriptor(c.curve);
      } catch (const DomainError&) {
        r.descriptors = false;
      }
    }
    // K^2 - 2 c2 is additive over every node; the cone plane of a contraction adds 3
    r.additivity = true;
    std::map<const SurfaceExpr*, long long> value;
    Surface again = evaluate(expr_from_json(Json::parse(r.expr)), [&](const SurfaceExpr& e, const Surface& s) {
      long long v = sig3(s.triple);
      value[&e] = v;
      long long expect = v;
      switch (e.kind) {
        case SurfaceExpr::Kind::Toric: break;
        case SurfaceExpr::Kind::Sum: expect = value.at(e.left.get()) + value.at(e.right.get()); break;
        case SurfaceExpr::Kind::SelfSum:
        case SurfaceExpr::Kind::Modify: expect = value.at(e.left.get()); break;
        case SurfaceExpr::Kind::Contract: expect = value.at(e.left.get()) + 3; break;
      }
      r.additivity = r.additivity && v == expect;
      r.noether = r.noether && noether_check(s).pass;
    });
    r.additivity = r.additivity && again.triple == x.triple && again.ledger == x.ledger;
  } catch (const DomainError& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

FanCycle random_curve(const FanPlane& p, std::mt19937_64& rng, int max_rays, int max_weight, int max_coef) {
  if (p.fine_cones.empty()) throw DomainError("the plane has no fine cones");
  std::map<IntVec, long long> w;
  IntVec sum(p.dim, 0);
  int count = 1 + pick(rng, max_rays);
  for (int t = 0; t < count; ++t) {
    auto [line, point] = p.fine_cones[pick(rng, static_cast<int>(p.fine_cones.size()))];
    long long a = pick(rng, max_coef + 1), b = pick(rng, max_coef + 1);
    if (a == 0 && b == 0) a = 1;
    IntVec v(p.dim);
    for (int k = 0; k < p.dim; ++k) v[k] = a * p.fine_rays[line].dir[k] + b * p.fine_rays[point].dir[k];
    long long g = gcd_of(v);
    for (auto& x : v) x /= g;
    long long weight = 1 + pick(rng, max_weight);
    w[v] += weight;
    for (int k = 0; k < p.dim; ++k) sum[k] += weight * v[k];
  }
  if (!is_zero(sum)) {
    for (auto& x : sum) x = -x;
    std::vector<long long> r = positive_decomposition(sum, p.basis);
    for (int i = 0; i <= p.dim; ++i)
      if (r[i] != 0) w[p.basis.u[i]] += r[i];
  }
  std::vector<CycleRay> rays;
  for (const auto& [dir, weight] : w) rays.push_back({dir, weight});
  return make_cycle(p.dim, rays);
}

std::vector<std::vector<ElementSet>> disjoint_point_families(const Matroid& m) {
  const auto& pts = m.flats(2);
  std::vector<std::vector<ElementSet>> out;
  std::vector<ElementSet> cur;
  auto rec = [&](auto&& self, std::size_t from, ElementSet used) -> void {
    out.push_back(cur);
    for (std::size_t i = from; i < pts.size(); ++i) {
      if (pts[i] & used) continue;
      cur.push_back(pts[i]);
      self(self, i + 1, used | pts[i]);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<MatroidRecord> matroid_sweep(const std::vector<Matroid>& ms, Exec exec) {
  std::vector<MatroidRecord> out(ms.size());
  run_tasks(static_cast<long long>(ms.size()), exec, [&](long long i) { out[i] = sweep_one(ms[i]); });
  return out;
}

std::vector<Matroid> library_matroids(int max_n) {
  std::vector<Matroid> out;
  for (int n = 3; n <= max_n; ++n) {
    auto ms = simple_rank3_matroids(n);
    out.insert(out.end(), ms.begin(), ms.end());
  }
  return out;
}

std::vector<BezoutRecord> bezout_sweep(const std::vector<FanPlane>& fans, int pairs_per_fan, std::uint64_t seed,
                                       Exec exec) {
  const long long total = static_cast<long long>(fans.size()) * pairs_per_fan;
  std::vector<BezoutRecord> out(total);
  run_tasks(total, exec, [&](long long t) {
    const int f = static_cast<int>(t / pairs_per_fan);
    const FanPlane& p = fans[f];
    std::mt19937_64 rng(task_seed(seed, f, t % pairs_per_fan));
    BezoutRecord r;
    r.fan = f;
    for (;; ++r.resamples) {
      try {
        r.c1 = random_curve(p, rng);
        r.c2 = random_curve(p, rng);
        FanCycle c3 = random_curve(p, rng);
        bezout_checks(r, c3, p);
        r.error.clear();
        break;
      } catch (const DomainError& e) {
        r.error = e.what();
        if (r.resamples >= 20) break;
      }
    }
    out[t] = std::move(r);
  });
  return out;
}

Surface random_surface(std::mt19937_64& rng, int depth) {
  Surface x = toric_surface(random_toric_fan(rng));
  for (int step = 0; step < depth; ++step) {
    std::optional<Surface> next;
    for (int attempt = 0; attempt < 8 && !next; ++attempt) {
      switch (pick(rng, 5)) {
        case 0: next = try_sum(rng, x, depth > 1 && pick(rng, 2) ? random_surface(rng, depth / 2)
                                                                 : toric_surface(random_toric_fan(rng)));
          break;
        case 1: next = try_self_sum(rng, x); break;
        case 2: next = try_modify(rng, x); break;
        case 3: next = try_contract(rng, x); break;
        default: next = sum_with_hirzebruch(rng, x); break;
      }
    }
    if (!next) next = try_modify(rng, x);
    if (next) x = std::move(*next);
  }
  if (!uses_operations(*x.expr)) {
    if (auto y = sum_with_hirzebruch(rng, x)) x = std::move(*y);
  }
  return x;
}

std::vector<NoetherRecord> noether_sweep(int trees, std::uint64_t seed, Exec exec) {
  std::vector<NoetherRecord> out(trees);
  run_tasks(trees, exec, [&](long long i) { out[i] = noether_one(task_seed(seed, i)); });
  return out;
}

}  // namespace tropsurf
