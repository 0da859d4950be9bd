#include "doctest.h"
#include "oracles.hpp"
#include "tropsurf/bergman.hpp"

#include <map>

using namespace tropsurf;

namespace {

Matroid braid() { return from_lines(6, {make_set({0, 1, 3}), make_set({1, 2, 4}), make_set({0, 2, 5}), make_set({3, 4, 5})}); }

int big_points_through(const Matroid& m, int i) {
  int b = 0;
  for (ElementSet p : m.flats(2))
    if (contains(p, i) && set_size(p) >= 3) ++b;
  return b;
}

}  // namespace

TEST_CASE("standard basis") {
  Basis b3 = standard_basis(3);
  CHECK(b3.u[1] == IntVec{-1, 0, 0});
  CHECK(b3.u[2] == IntVec{0, -1, 0});
  CHECK(b3.u[3] == IntVec{0, 0, -1});
  CHECK(b3.u[0] == IntVec{1, 1, 1});
  CHECK(standard_basis(2).u[0] == IntVec{1, 1});
  CHECK(make_basis({b3.u[1], b3.u[2], b3.u[3]}) == b3);
  CHECK_THROWS_AS(make_basis({{2, 0}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(make_basis({{1, 1}, {2, 2}}), DomainError);
  Basis sheared = make_basis({{1, 1}, {0, 1}});
  CHECK(sheared.coords({3, 5}) == IntVec{3, 2});
}

TEST_CASE("braid fan is the cone over the Petersen graph") {
  FanPlane p = build_fan(braid(), standard_basis(5));
  CHECK(edge_count(p) == 10);
  CHECK(face_count(p) == 15);
  LinkGraph g = link_graph(p);
  int points = 0, lines = 0;
  for (const FanRay& r : p.rays) (r.flat_rank == 2 ? points : lines)++;
  CHECK(points == 4);
  CHECK(lines == 6);
  CHECK(oracle::brute_graph_isomorphic(10, g.edges, oracle::petersen_edges()));
}

TEST_CASE("U34 fan is the cone over K4") {
  FanPlane p = build_fan(uniform(3, 4), standard_basis(3));
  CHECK(edge_count(p) == 4);
  CHECK(face_count(p) == 6);
  std::vector<std::pair<int, int>> k4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(oracle::brute_graph_isomorphic(4, link_graph(p).edges, k4));
  for (int r = 0; r < 4; ++r) CHECK(sigma(p, r) == 1);
}

TEST_CASE("missing rays") {
  CHECK(classify_missing_ray(uniform(3, 3)).kind == MissingRayKind::FullPlane);
  CHECK(classify_missing_ray(direct_sum(uniform(2, 3), uniform(1, 1))).kind == MissingRayKind::LineTimesR);
  CHECK(classify_missing_ray(uniform(3, 4)).kind == MissingRayKind::None);
  Matroid pc = parallel_connection(uniform(2, 3), uniform(2, 3), 0);
  MissingRay mr = classify_missing_ray(pc);
  CHECK(mr.kind == MissingRayKind::BipartiteCone);
  CHECK(mr.k == 2);
  CHECK(mr.l == 2);

  FanPlane p = build_fan(pc, standard_basis(4));
  CHECK(edge_count(p) == 6);
  CHECK(face_count(p) == 9);
  for (const FanRay& r : p.rays) CHECK(r.flat != singleton(0));
  std::vector<std::pair<int, int>> k33;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.push_back({a, b});
  CHECK(oracle::brute_graph_isomorphic(6, link_graph(p).edges, k33));
  for (int r = 0; r < 6; ++r) CHECK(sigma(p, r) == 0);

  FanPlane full = build_fan(uniform(3, 3), standard_basis(2));
  CHECK(edge_count(full) == 0);
  CHECK(face_count(full) == 0);

  // R x L: two opposite rays joined by N half-planes
  FanPlane rl = build_fan(direct_sum(uniform(2, 3), uniform(1, 1)), standard_basis(3));
  CHECK(edge_count(rl) == 2);
  CHECK(face_count(rl) == 3);
  IntVec s = rl.rays[0].dir;
  for (auto& x : s) x = -x;
  CHECK(s == rl.rays[1].dir);
}

TEST_CASE("sigma agrees with the incidence formula when no ray is missing") {
  for (int n = 4; n <= 7; ++n)
    for (const Matroid& m : simple_rank3_classes(n)) {
      if (classify_missing_ray(m).kind != MissingRayKind::None) continue;
      FanPlane p = build_fan(m, standard_basis(n - 1));
      for (int r = 0; r < edge_count(p); ++r) {
        const FanRay& ray = p.rays[r];
        long long expect = ray.flat_rank == 2 ? -1 : 1 - big_points_through(m, elements(ray.flat)[0]);
        CHECK(sigma(p, r) == expect);
      }
      // counts used inside the Chern lemma
      int big = static_cast<int>(big_points(m).size());
      int doubletons = static_cast<int>(m.flats(2).size()) - big;
      int sum_big = 0;
      for (ElementSet q : big_points(m)) sum_big += set_size(q);
      CHECK(edge_count(p) == n + big);
      CHECK(face_count(p) == doubletons + sum_big);
    }
  FanPlane bp = build_fan(braid(), standard_basis(5));
  for (int r = 0; r < 10; ++r) CHECK(sigma(bp, r) == -1);
}

TEST_CASE("reconstruction roundtrip") {
  for (int n = 3; n <= 7; ++n)
    for (const Matroid& m : simple_rank3_classes(n)) {
      FanPlane p = build_fan(m, standard_basis(n - 1));
      std::vector<IntVec> rays;
      std::vector<std::pair<int, int>> cones;
      for (const FanRay& r : p.rays) rays.push_back(r.dir);
      for (const FanFace& f : p.faces) cones.push_back({f.a, f.b});
      Matroid back = reconstruct_matroid(n - 1, rays, cones);
      CHECK(oracle::brute_isomorphic(n, back.flats_by_rank(), m.flats_by_rank()));
    }
  // a non-standard basis
  Basis b = make_basis({{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 2, 1, 0}, {0, 0, 0, 0, -1}});
  FanPlane p = build_fan(braid(), b);
  std::vector<IntVec> rays;
  std::vector<std::pair<int, int>> cones;
  for (const FanRay& r : p.rays) rays.push_back(r.dir);
  for (const FanFace& f : p.faces) cones.push_back({f.a, f.b});
  CHECK(reconstruct_matroid(5, rays, cones, b) == braid());
  CHECK_THROWS_AS(reconstruct_matroid(5, rays, cones), DomainError);
  cones.pop_back();
  CHECK_THROWS_AS(reconstruct_matroid(5, rays, cones, b), DomainError);

  // cone over K_{3,3} in R^4
  Matroid pc = parallel_connection(uniform(2, 3), uniform(2, 3), 0);
  FanPlane q = build_fan(pc, standard_basis(4));
  rays.clear();
  cones.clear();
  for (const FanRay& r : q.rays) rays.push_back(r.dir);
  for (const FanFace& f : q.faces) cones.push_back({f.a, f.b});
  CHECK(reconstruct_matroid(4, rays, cones) == pc);
  CHECK_THROWS_AS(reconstruct_matroid(3, {{2, 0, 0}}, {}), DomainError);
}

TEST_CASE("saturated triangles") {
  CHECK(has_saturated_triangle(braid()));
  CHECK_FALSE(has_saturated_triangle(uniform(3, 4)));
  Matroid pc = parallel_connection(uniform(2, 3), uniform(2, 3), 0);
  // exhaustive search over line triples and covering point triples
  auto fl = pc.flats_by_rank();
  bool brute = false;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) {
        if (i == j || j == k || i == k) continue;
        for (ElementSet I : fl[2])
          for (ElementSet J : fl[2])
            for (ElementSet K : fl[2]) {
              if (contains(I, j) && contains(I, k) && contains(J, i) && contains(J, k) && contains(K, i) &&
                  contains(K, j) && (I | J | K) == full_set(5))
                brute = true;
            }
      }
  CHECK(has_saturated_triangle(pc) == brute);
}

TEST_CASE("support membership") {
  FanPlane p = build_fan(uniform(3, 4), standard_basis(3));
  CHECK(fan_contains(p, {-2, -1, 0}));
  CHECK(fan_contains(p, {1, 0, 1}));
  CHECK(fan_contains(p, {1, 1, -1}));
  // (1,-1,0) = u_0 + ... needs three basis vectors: outside the plane
  CHECK_FALSE(fan_contains(p, {1, -1, 0}));
  for (const FanRay& r : p.rays) CHECK(fan_contains(p, r.dir));
  CHECK_THROWS_AS(build_fan(uniform(2, 3), standard_basis(2)), DomainError);
}
