// Acceptance run: one PASS/FAIL line per criterion, with wall time. Reference
// values come either from the worked examples or from the independent
// computations in oracles.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tropsurf/json_io.hpp"
#include "tropsurf/sweep.hpp"

using namespace tropsurf;

namespace {

Json data(const std::string& name) { return load_json(std::string(TROPSURF_DATA_DIR) + "/" + name); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(const char* name, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s >= limit_s) o.require(false, "took longer than " + std::to_string(limit_s) + " s");
  std::printf("%s  %-28s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", name, s, o.detail.c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

oracle::Mask mask(ElementSet s) { return s; }

std::vector<std::vector<oracle::Mask>> plain_flats(const Matroid& m) {
  std::vector<std::vector<oracle::Mask>> out;
  for (const auto& level : m.flats_by_rank()) out.emplace_back(level.begin(), level.end());
  return out;
}

Outcome klein_diamond() {
  Outcome o;
  Diamond d = diamond(complex_from_json(data("klein_bottle.json")));
  // rows p = 0, 1, 2; columns q = 0, 1, 2
  const char* expected[3][3] = {{"Z", "Z/2 + Z", "0"}, {"Z/2 + Z", "Z/2 + Z^2", "Z"}, {"Z/2", "Z", "Z"}};
  o.require(d.dim == 2, "dimension");
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      o.require(d.h[p][q].to_string() == expected[p][q],
                "H" + std::to_string(p) + std::to_string(q) + " = " + d.h[p][q].to_string());
  o.detail = o.pass ? "H20 = Z/2, H11 = Z/2 + Z^2, all nine groups exact" : o.detail;
  return o;
}

Outcome pairing_table() {
  Outcome o;
  Json k = data("klein_bottle.json");
  Atlas a = atlas_from_json(k);
  std::map<std::string, OneOneCycle> c;
  for (auto& x : cycles_from_json(k)) c[x.name] = x;
  auto pair = [&](const char* x, const char* y) { return intersection_pairing(c.at(x), c.at(y), a); };
  o.require(pair("gamma", "gamma_pushoff") == 0, "gamma.gamma");
  o.require(pair("gamma", "gamma1") == 0, "gamma.gamma1");
  o.require(pair("gamma", "gamma2") == 1, "gamma.gamma2");
  o.require(pair("gamma1", "gamma1_pushoff") == 0, "gamma1.gamma1");
  o.require(pair("gamma1", "gamma2_pushoff") == 0, "gamma1.gamma2");
  o.require(pair("gamma2", "gamma1_pushoff") == 0, "gamma2.gamma1");
  o.require(pair("gamma2", "gamma2_pushoff") == 0, "gamma2.gamma2");
  if (o.pass) o.detail = "gamma.gamma = 0, gamma.gamma1 = 0, gamma.gamma2 = 1, gamma_i.gamma_j = 0";
  return o;
}

Outcome conic_degree() {
  Outcome o;
  FanPlane p = build_fan(matroid_from_json(data("u34.json")), standard_basis(3));
  FanCycle c = cycle_from_json(data("conic.json"));
  o.require(is_balanced(c) && lies_in(p, c), "conic is not a curve in the plane");
  long long d = deg_delta(c, p.basis);
  o.require(d == 2, "deg = " + std::to_string(d));
  o.require(deg_over_bases(c, p, {p.basis}) == 2, "deg over the standard basis");
  if (o.pass) o.detail = "deg = 2";
  return o;
}

Outcome petersen_fan() {
  Outcome o;
  Matroid m = matroid_from_json(data("braid.json"));
  auto oracle_flats = oracle::flats_from_rank(6, oracle::braid_oracle());
  o.require(oracle_flats == plain_flats(m), "braid.json is not the cycle matroid of K4");
  FanPlane p = build_fan(m, standard_basis(5));
  o.require(edge_count(p) == 10, "rays = " + std::to_string(edge_count(p)));
  o.require(face_count(p) == 15, "cones = " + std::to_string(face_count(p)));
  LinkGraph g = link_graph(p);
  o.require(oracle::brute_graph_isomorphic(10, g.edges, oracle::petersen_edges()), "link graph is not Petersen");
  long long chern = 2 - p.dim + face_count(p) - edge_count(p);
  long long chi = oracle::reduced_at_one(6, oracle::braid_oracle());
  o.require(chern == 2, "Chern count = " + std::to_string(chern));
  o.require(chi == 2, "chi_bar(1) = " + std::to_string(chi));
  o.require(c2_mult_fan(p) == 2 && c2_point_multiplicity(m) == 2, "library c2");
  if (o.pass) o.detail = "10 rays, 15 cones, Petersen link, c2 = 2 both ways";
  return o;
}

std::vector<MatroidRecord> matroid_records;
std::vector<Matroid> library;

Outcome k_squared() {
  Outcome o;
  library = library_matroids(7);
  matroid_records = matroid_sweep(library, Exec::Parallel);
  std::map<int, int> per_n;
  for (std::size_t i = 0; i < library.size(); ++i) {
    const auto& r = matroid_records[i];
    o.require(r.error.empty(), r.error);
    long long N = library[i].size() - 1, expect = (N - 2) * (N - 2);
    for (ElementSet q : library[i].flats(2)) expect -= static_cast<long long>(set_size(q) - 2) * (set_size(q) - 2);
    o.require(r.k2 == expect && r.k2_local == expect, "K^2 mismatch on matroid " + std::to_string(i));
    ++per_n[r.n];
  }
  std::ostringstream d;
  d << library.size() << " labeled matroids (";
  for (auto [n, c] : per_n) d << (n > 3 ? ", " : "") << "n=" << n << ": " << c;
  d << ")";
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome bezout() {
  Outcome o;
  std::vector<FanPlane> fans;
  for (int n = 3; n <= 7; ++n)
    for (const Matroid& m : simple_rank3_classes(n)) fans.push_back(build_fan(m, standard_basis(n - 1)));
  const int per_fan = 30;
  auto recs = bezout_sweep(fans, per_fan, 2024, Exec::Parallel);
  int resamples = 0;
  for (const auto& r : recs) {
    o.require(r.error.empty(), r.error);
    o.require(r.bezout, "vertex + corners != deg * deg");
    o.require(r.symmetric && r.bilinear && r.pair_independent, "symmetry, bilinearity or pair independence");
    resamples += r.resamples;
  }
  o.require(recs.size() >= 1000, "too few pairs");
  // In R^2 the vertex multiplicity must match a translation count.
  FanPlane plane = build_fan(uniform(3, 3), standard_basis(2));
  std::mt19937_64 rng(77);
  auto plain = [](const FanCycle& c) {
    std::vector<oracle::PlaneRay> out;
    for (const auto& r : c.rays) out.push_back({{r.dir[0], r.dir[1]}, r.weight});
    return out;
  };
  for (int t = 0; t < 300; ++t) {
    FanCycle a = random_curve(plane, rng), b = random_curve(plane, rng);
    IntersectionReport r = intersect(a, b, plane);
    o.require(r.vertex == oracle::translated_count(plain(a), plain(b), rng), "translation oracle in R^2");
  }
  if (o.pass)
    o.detail = std::to_string(recs.size()) + " pairs over " + std::to_string(fans.size()) + " fans, " +
               std::to_string(resamples) + " resamples; 300 pairs against the translation count";
  return o;
}

Outcome reconstruction() {
  Outcome o;
  int count = 0;
  for (std::size_t i = 0; i < library.size(); ++i) {
    o.require(matroid_records[i].roundtrip, "roundtrip failed on matroid " + std::to_string(i));
    ++count;
  }
  // exhaustive isomorphism check on one representative per class
  for (int n = 3; n <= 7; ++n)
    for (const Matroid& m : simple_rank3_classes(n)) {
      FanPlane p = build_fan(m, standard_basis(n - 1));
      std::vector<IntVec> rays;
      for (const auto& r : p.rays) rays.push_back(r.dir);
      std::vector<std::pair<int, int>> cones;
      for (const auto& f : p.faces) cones.push_back({f.a, f.b});
      Matroid back = reconstruct_matroid(p.dim, rays, cones);
      o.require(oracle::brute_isomorphic(n, plain_flats(m), plain_flats(back)), "brute-force isomorphism");
    }
  if (o.pass) o.detail = std::to_string(count) + " matroids; 39 classes by exhaustive isomorphism";
  return o;
}

Outcome vertex_split() {
  Outcome o;
  long long ext = 0;
  for (std::size_t i = 0; i < library.size(); ++i) {
    o.require(matroid_records[i].splits_ok, "split identity failed on matroid " + std::to_string(i));
    o.require(matroid_records[i].extensions == static_cast<int>(disjoint_point_families(library[i]).size()),
              "extension count");
    ext += matroid_records[i].extensions;
  }
  // every extension of every class, from rank functions alone
  long long checked = 0;
  for (int n = 3; n <= 7; ++n)
    for (const Matroid& m : simple_rank3_classes(n)) {
      auto rk = oracle::rank_from_flats(plain_flats(m));
      long long before = oracle::reduced_at_one(n, rk);
      for (const auto& family : disjoint_point_families(m)) {
        std::vector<oracle::Mask> through;
        for (ElementSet f : family) through.push_back(mask(f));
        auto erk = oracle::extension_rank(n, rk, through);
        long long after = oracle::reduced_at_one(n + 1, erk);
        int r = 0;
        auto ext_flats = oracle::flats_from_rank(n + 1, erk);
        for (oracle::Mask f : ext_flats[2]) r += (f >> n) & 1u;
        o.require(before == after + (2 - r), "oracle split identity");
        VertexSplit s = modification_vertex_split(m, family);
        o.require(s.before == before && s.after_interior == after && s.divisor_rays == r, "library split vs oracle");
        ++checked;
      }
    }
  if (o.pass)
    o.detail = std::to_string(ext) + " extensions; " + std::to_string(checked) + " of them against rank-function oracle";
  return o;
}

// Fans from the projective plane by up to six star subdivisions, up to rotation.
std::vector<Fan2D> subdivided_fans() {
  auto canon = [](const Fan2D& f) {
    std::vector<Vec2> best = f.rays;
    for (std::size_t s = 1; s < f.rays.size(); ++s) {
      std::vector<Vec2> r(f.rays.begin() + s, f.rays.end());
      r.insert(r.end(), f.rays.begin(), f.rays.begin() + s);
      best = std::min(best, r);
    }
    return best;
  };
  std::set<std::vector<Vec2>> seen = {canon(projective_plane_fan())};
  std::vector<Fan2D> all = {projective_plane_fan()}, frontier = all;
  for (int depth = 1; depth <= 6; ++depth) {
    std::vector<Fan2D> next;
    for (const Fan2D& f : frontier)
      for (int i = 0; i < static_cast<int>(f.rays.size()); ++i) {
        Fan2D g = star_subdivide(f, i);
        if (seen.insert(canon(g)).second) next.push_back(g);
      }
    all.insert(all.end(), next.begin(), next.end());
    frontier = next;
  }
  return all;
}

std::vector<Surface> toric_surfaces;
std::vector<NoetherRecord> noether_records;
Surface selfsum_surface, blowdown_surface;

Outcome noether() {
  Outcome o;
  long long det_fail = 0;
  for (const Fan2D& f : subdivided_fans()) {
    Surface x = toric_surface(f);
    // independent K^2 from the rays: a_i from v_{i-1} + v_{i+1} = a_i v_i
    const int n = static_cast<int>(f.rays.size());
    long long k2 = 2LL * n;
    for (int i = 0; i < n; ++i) {
      Vec2 p = f.rays[(i + n - 1) % n], v = f.rays[i], q = f.rays[(i + 1) % n];
      long long sx = p[0] + q[0], sy = p[1] + q[1];
      det_fail += sx * v[1] - sy * v[0] != 0;
      k2 -= v[0] != 0 ? sx / v[0] : sy / v[1];
    }
    o.require(x.triple == InvariantTriple{1, k2, n}, "toric triple");
    o.require(noether_check(x).pass && 12 == k2 + n, "Noether on a toric surface");
    toric_surfaces.push_back(x);
  }
  o.require(det_fail == 0, "fan is not unimodular");
  noether_records = noether_sweep(200, 31337, Exec::Parallel);
  std::set<std::string> ops;
  for (const auto& r : noether_records) {
    o.require(r.error.empty(), r.error);
    o.require(r.noether, "Noether fails on " + r.expr);
    o.require(r.additivity, "K^2 - 2 c2 not additive on " + r.expr);
    o.require(12 * r.triple.chi == r.triple.K2 + r.triple.c2, "triple");
    for (const char* k : {"sum", "selfsum", "modify", "contract"})
      if (r.expr.find(std::string("\"") + k + "\"") != std::string::npos) ops.insert(k);
  }
  o.require(ops.size() == 4, "random trees miss an operation");
  selfsum_surface = evaluate(expr_from_json(data("selfsum_hirzebruch.json")));
  blowdown_surface = evaluate(expr_from_json(data("blowdown_roundtrip.json")));
  o.require(selfsum_surface.triple == InvariantTriple{0, 0, 0}, "Hirzebruch self-sum");
  o.require(blowdown_surface.triple == InvariantTriple{1, 9, 3}, "blow-down roundtrip");
  o.require(noether_check(selfsum_surface).pass && noether_check(blowdown_surface).pass, "named surfaces");
  if (o.pass)
    o.detail = std::to_string(toric_surfaces.size()) + " toric fans, 200 random trees, self-sum (0,0,0), blow-down (1,9,3)";
  return o;
}

Outcome adjunction() {
  Outcome o;
  long long curves = 0;
  for (const Surface& x : toric_surfaces)
    for (const auto& c : x.ledger) {
      o.require(adjunction_check(x, c.id).pass, "toric boundary curve " + c.id);
      ++curves;
    }
  for (const auto& r : noether_records) o.require(r.adjunction && r.descriptors, "ledger of " + r.expr);
  for (const Surface* x : {&selfsum_surface, &blowdown_surface})
    for (const auto& c : x->ledger) {
      o.require(adjunction_check(*x, c.id).pass, "named surface curve " + c.id);
      ++curves;
    }
  if (o.pass)
    o.detail = std::to_string(curves) + " toric and named boundary curves, " +
               std::to_string(noether_records.size()) + " random ledgers";
  return o;
}

// Cellular boundary matrices read straight from the complex file, signs only.
std::pair<std::vector<long long>, std::vector<oracle::Matrix>> constant_complex(const Json& j) {
  std::vector<std::vector<std::string>> by_dim(3);
  for (const auto& c : j.at("cells")) by_dim.at(c.at("dim").get<int>()).push_back(c.at("id").get<std::string>());
  std::vector<long long> n;
  for (const auto& v : by_dim) n.push_back(static_cast<long long>(v.size()));
  std::vector<oracle::Matrix> d(3);
  for (int q = 1; q <= 2; ++q) d[q].assign(n[q - 1], std::vector<long long>(n[q], 0));
  auto index = [](const std::vector<std::string>& v, const std::string& id) {
    return static_cast<int>(std::find(v.begin(), v.end(), id) - v.begin());
  };
  for (const auto& i : j.at("incidences")) {
    std::string big = i.at("big"), small = i.at("small");
    for (int q = 1; q <= 2; ++q) {
      int col = index(by_dim[q], big), row = index(by_dim[q - 1], small);
      if (col < n[q] && row < n[q - 1]) d[q][row][col] += i.at("sign").get<long long>();
    }
  }
  return {n, d};
}

Outcome homology_oracle() {
  Outcome o;
  for (const char* name : {"klein_bottle.json", "torus.json"}) {
    Json j = data(name);
    CellComplex x = complex_from_json(j);
    auto [n, d] = constant_complex(j);
    for (int q = 0; q <= 2; ++q) {
      auto [free, torsion] = oracle::chain_homology(n, d, q);
      HomologyGroup h = homology(x, 0, q);
      o.require(h.free_rank == free && h.torsion == torsion,
                std::string(name) + " H0" + std::to_string(q) + " = " + h.to_string());
    }
  }
  if (o.pass) o.detail = "Klein bottle and torus, q = 0, 1, 2";
  return o;
}

}  // namespace

int main() {
  criterion("klein-bottle-diamond", 1.0, klein_diamond);
  criterion("klein-bottle-pairing", 1.0, pairing_table);
  criterion("conic-degree", 0, conic_degree);
  criterion("petersen-fan", 0, petersen_fan);
  criterion("k-squared-cross-check", 60.0, k_squared);
  criterion("bezout", 0, bezout);
  criterion("reconstruction-roundtrip", 0, reconstruction);
  criterion("modification-vertex-split", 0, vertex_split);
  criterion("noether", 30.0, noether);
  criterion("adjunction", 0, adjunction);
  criterion("homology-oracle", 0, homology_oracle);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
