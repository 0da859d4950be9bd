#include "doctest.h"
#include "oracles.hpp"
#include "tropsurf/fan_intersect.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

using namespace tropsurf;
using boost::multiprecision::cpp_int;

namespace {

FanCycle conic() { return make_cycle(3, {{{-2, -1, 0}, 1}, {{1, 0, 1}, 1}, {{1, 1, -1}, 1}}); }

FanCycle standard_line(int n) {
  Basis b = standard_basis(n);
  std::vector<CycleRay> rays;
  for (int i = 0; i <= n; ++i) rays.push_back({b.u[i], 1});
  return make_cycle(n, rays);
}

Matroid braid() { return from_lines(6, {make_set({0, 1, 3}), make_set({1, 2, 4}), make_set({0, 2, 5}), make_set({3, 4, 5})}); }

// Random balanced fan curve in R^2.
FanCycle random_plane_curve(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-4, 4), weight(1, 3), count(1, 3);
  FanCycle c{2, {}};
  IntVec s = {0, 0};
  int k = count(rng);
  for (int t = 0; t < k; ++t) {
    IntVec v = {coord(rng), coord(rng)};
    if (is_zero(v)) continue;
    long long g = gcd_of(v);
    long long w = weight(rng) * g;
    v = {v[0] / g, v[1] / g};
    c = add_cycles(c, make_cycle(2, {{v, w}}));
    s[0] += w * v[0];
    s[1] += w * v[1];
  }
  if (!is_zero(s)) {
    long long g = gcd_of(s);
    c = add_cycles(c, make_cycle(2, {{{-s[0] / g, -s[1] / g}, g}}));
  }
  if (c.rays.empty()) return standard_line(2);
  return c;
}

long long det(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

// Stable intersection at the origin of two fan curves in R^2, counted by
// translating the second curve by a generic vector.
long long translated_count(const FanCycle& a, const FanCycle& b, std::mt19937_64& rng) {
  auto plain = [](const FanCycle& c) {
    std::vector<oracle::PlaneRay> out;
    for (const auto& r : c.rays) out.push_back({{r.dir[0], r.dir[1]}, r.weight});
    return out;
  };
  return oracle::translated_count(plain(a), plain(b), rng);
}

// Order in t of b^{l1} t^{k2 l1} - c a^{l2} t^{k1 l2}: the first branch
// (a t^k1, b t^k2) substituted into the equation of the second.
long long puiseux_order(long long k1, long long k2, long long l1, long long l2, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(2, 50);
  cpp_int a = coef(rng), b = coef(rng), c = coef(rng);
  std::map<long long, cpp_int> poly;
  cpp_int bl = 1, al = 1;
  for (long long i = 0; i < l1; ++i) bl *= b;
  for (long long i = 0; i < l2; ++i) al *= a;
  poly[k2 * l1] += bl;
  poly[k1 * l2] -= c * al;
  for (const auto& [e, x] : poly)
    if (x != 0) return e;
  return -1;
}

}  // namespace

// Redeclared from fan_intersect.hpp for brevity.
using Projected = std::vector<std::pair<std::pair<long long, long long>, long long>>;

TEST_CASE("conic self-intersection in the U34 plane") {
  FanPlane p = build_fan(uniform(3, 4), standard_basis(3));
  FanCycle c = conic();
  REQUIRE(lies_in(p, c));
  CHECK(deg_delta(c, p.basis) == 2);
  IntersectionReport r = intersect(c, c, p);
  CHECK(r.total == 4);
  std::map<ElementSet, long long> corners;
  for (const auto& x : r.corners) corners[x.point] = x.multiplicity;
  CHECK(corners.size() == 3);
  CHECK(corners[make_set({1, 2})] == 2);
  CHECK(corners[make_set({0, 2})] == 1);
  CHECK(corners[make_set({0, 3})] == 2);
  CHECK(r.vertex == -1);
  CHECK(bezout_total(c, c, p) == 4);
}

TEST_CASE("lines through a vertex") {
  for (int n = 2; n <= 4; ++n) {
    FanPlane p = build_fan(uniform(3, n + 1), standard_basis(n));
    FanCycle l = standard_line(n);
    if (!lies_in(p, l)) continue;
    IntersectionReport r = intersect(l, l, p);
    CHECK(r.deg1 == 1);
    CHECK(r.corners.empty());
    CHECK(r.vertex == 1);
  }
  FanPlane p = build_fan(uniform(3, 4), standard_basis(3));
  FanCycle l = standard_line(3);
  CHECK(intersect(l, conic(), p).vertex == 2);
}

TEST_CASE("corner formula agrees with Puiseux orders") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> e(1, 7), w(1, 3);
  for (int t = 0; t < 500; ++t) {
    long long k1 = e(rng), k2 = e(rng), l1 = e(rng), l2 = e(rng);
    long long wa = w(rng), wb = w(rng);
    // a weight-w ray is w parallel branches; non-primitive directions are gcd branches
    long long ga = std::gcd(k1, k2), gb = std::gcd(l1, l2);
    long long expect = wa * ga * wb * gb * puiseux_order(k1 / ga, k2 / ga, l1 / gb, l2 / gb, rng);
    CHECK(corner_formula(Projected{{{k1, k2}, wa}}, Projected{{{l1, l2}, wb}}) == expect);
  }
  CHECK_THROWS_AS(corner_formula(Projected{{{-1, 2}, 1}}, Projected{{{1, 1}, 1}}), DomainError);
}

TEST_CASE("vertex multiplicity in R^2 equals the translated intersection count") {
  FanPlane p = build_fan(uniform(3, 3), standard_basis(2));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 400; ++t) {
    FanCycle a = random_plane_curve(rng), b = random_plane_curve(rng);
    IntersectionReport r = intersect(a, b, p);
    CHECK(r.vertex == translated_count(a, b, rng));
    long long sum = r.vertex;
    for (const auto& c : r.corners) sum += c.multiplicity;
    CHECK(sum == r.deg1 * r.deg2);
  }
}

TEST_CASE("symmetry, bilinearity and projection pair independence") {
  std::mt19937_64 rng(7);
  std::vector<FanPlane> fans = {build_fan(uniform(3, 3), standard_basis(2)), build_fan(uniform(3, 4), standard_basis(3))};
  std::vector<std::vector<FanCycle>> curves(2);
  for (int t = 0; t < 30; ++t) curves[0].push_back(random_plane_curve(rng));
  curves[1] = {conic(), standard_line(3), canonical_cycle(fans[1])};
  for (std::size_t f = 0; f < fans.size(); ++f) {
    const FanPlane& p = fans[f];
    const auto& cs = curves[f];
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) {
        CHECK(vertex_multiplicity(cs[i], cs[j], p) == vertex_multiplicity(cs[j], cs[i], p));
        for (std::size_t k = 0; k < cs.size(); k += 3) {
          FanCycle s = add_cycles(cs[i], cs[k]);
          if (s.rays.empty()) continue;
          CHECK(vertex_multiplicity(s, cs[j], p) ==
                vertex_multiplicity(cs[i], cs[j], p) + vertex_multiplicity(cs[k], cs[j], p));
        }
      }
  }
  // big points of the braid plane admit three projection pairs
  FanPlane bp = build_fan(braid(), standard_basis(5));
  FanCycle k = canonical_cycle(bp);
  for (ElementSet q : big_points(bp.matroid)) {
    auto es = elements(q);
    std::set<long long> values;
    int pairs = 0;
    for (std::size_t x = 0; x < es.size(); ++x)
      for (std::size_t y = x + 1; y < es.size(); ++y) {
        try {
          values.insert(corner_multiplicity(k, k, q, bp, std::make_pair(es[x], es[y])));
          ++pairs;
        } catch (const DomainError&) {
        }
      }
    CHECK(pairs >= 1);
    CHECK(values.size() == 1);
  }
}

TEST_CASE("K^2 of fan planes") {
  CHECK(K_squared(build_fan(uniform(3, 4), standard_basis(3))) == 1);
  CHECK(K_squared(build_fan(braid(), standard_basis(5))) == 5);
  FanPlane pc = build_fan(parallel_connection(uniform(2, 3), uniform(2, 3), 0), standard_basis(4));
  CHECK(K_squared(pc) == 2);
  CHECK(K_squared_local(pc) == 2);
  CHECK(K_squared(build_fan(uniform(3, 3), standard_basis(2))) == 0);
  CHECK(K_squared(build_fan(direct_sum(uniform(2, 3), uniform(1, 1)), standard_basis(3))) == 0);
  // the self-intersection of the canonical cycle where it is defined by the corner formula
  FanPlane u = build_fan(uniform(3, 5), standard_basis(4));
  CHECK(K_squared(u) == 4);
  for (int n = 4; n <= 7; ++n)
    for (const Matroid& m : simple_rank3_classes(n)) {
      FanPlane p = build_fan(m, standard_basis(n - 1));
      CHECK(K_squared_local(p) == K_squared(p));
    }
}

TEST_CASE("c2 multiplicities") {
  CHECK(c2_mult_fan(build_fan(uniform(3, 4), standard_basis(3))) == 1);
  CHECK(c2_mult_fan(build_fan(braid(), standard_basis(5))) == 2);
  CHECK(c2_mult_fan(build_fan(parallel_connection(uniform(2, 3), uniform(2, 3), 0), standard_basis(4))) == 1);
  CHECK(c2_mult_fan(build_fan(uniform(3, 3), standard_basis(2))) == 0);
  auto rk = oracle::braid_oracle();
  auto q = oracle::divide_by_t_minus_1(oracle::whitney_char_poly(6, rk));
  long long at1 = 0;
  for (long long x : q) at1 += x;
  CHECK(at1 == 2);
}

TEST_CASE("vertex split under a modification") {
  // U34 realized by e1, e2, e3, e1+e2+e3; new element e1+2e2 sits on the point {0,1}.
  std::vector<std::vector<long long>> base = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  std::vector<std::pair<std::vector<long long>, std::vector<ElementSet>>> cases = {
      {{1, 2, 3}, {}},
      {{1, 2, 0}, {make_set({0, 1})}},
      {{1, 1, 2}, {make_set({2, 3})}},
  };
  for (const auto& [vec, through] : cases) {
    auto vecs = base;
    vecs.push_back(vec);
    auto rk = oracle::vector_matroid(vecs);
    auto q = oracle::divide_by_t_minus_1(oracle::whitney_char_poly(5, rk));
    long long after = 0;
    for (long long x : q) after += x;
    int r = 0;
    auto flats = oracle::flats_from_rank(5, rk);
    for (oracle::Mask s : flats[2])
      if ((s >> 4) & 1u) ++r;
    VertexSplit vs = modification_vertex_split(uniform(3, 4), through);
    CHECK(vs.before == 1);
    CHECK(vs.after_interior == after);
    CHECK(vs.divisor_rays == r);
    CHECK(vs.after_boundary == 2 - r);
  }  // U33: the generic extension is U34, through a point it is a line with a triple point
  VertexSplit g = modification_vertex_split(uniform(3, 3), {});
  CHECK(g.before == 0);
  CHECK(g.after_interior == 1);
  CHECK(g.after_boundary == -1);
  VertexSplit t = modification_vertex_split(uniform(3, 3), {make_set({0, 1})});
  CHECK(t.before == 0);
  CHECK(t.after_interior == 0);
  CHECK(t.after_boundary == 0);
}
