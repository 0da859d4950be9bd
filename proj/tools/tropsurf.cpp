// tropsurf: command-line front end for the tropical surface library.
//
//   tropsurf matroid info --matroid m.json
//   tropsurf matroid split --matroid m.json --through 0,1 --through 2,3
//   tropsurf fan build --matroid m.json [--basis b.json]
//   tropsurf fan reconstruct --fan f.json
//   tropsurf cycle degree --cycle c.json --matroid m.json
//   tropsurf intersect curves --matroid m.json --cycle a.json --cycle b.json
//   tropsurf surface {noether,ledger,adjunction,signature} --expr s.json
//   tropsurf homology {diamond,group,pairing,signature} --complex x.json
//
// Every command takes --json and --out <path>. Exit codes: 0 success, 1 domain
// error, 2 usage error.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tropsurf/json_io.hpp"

using namespace tropsurf;

namespace {

struct Report {
  Json json;
  std::string text;
};

struct Options {
  bool json = false;
  std::string out;
  std::string matroid, fan, complex, expr, basis;
  std::vector<std::string> cycles;
  std::vector<std::string> through;
  std::string a, b;
  int p = 0, q = 0;
};

bool use_color(const Options& o) {
  const char* env = std::getenv("TROPSURF_COLOR");
  if (env && std::string(env) == "0") return false;
  return o.out.empty() && isatty(fileno(stdout));
}

std::string verdict(bool pass, bool color) {
  std::string w = pass ? "pass" : "fail";
  if (!color) return w;
  return (pass ? "\033[32m" : "\033[31m") + w + "\033[0m";
}

std::string ints(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

Matroid load_matroid(const Options& o) {
  if (o.matroid.empty()) throw CLI::RequiredError("--matroid");
  return matroid_from_json(load_json(o.matroid));
}

Basis load_basis(const Options& o, int n) {
  return o.basis.empty() ? standard_basis(n) : basis_from_json(load_json(o.basis));
}

FanPlane load_plane(const Options& o) {
  Matroid m = load_matroid(o);
  return build_fan(m, load_basis(o, m.size() - 1));
}

Surface load_surface(const Options& o) {
  if (o.expr.empty()) throw CLI::RequiredError("--expr");
  return evaluate(expr_from_json(load_json(o.expr)));
}

Json load_complex_json(const Options& o) {
  if (o.complex.empty()) throw CLI::RequiredError("--complex");
  return load_json(o.complex);
}

std::vector<ElementSet> parse_through(const std::vector<std::string>& specs) {
  std::vector<ElementSet> out;
  for (const auto& s : specs) {
    std::vector<int> es;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        es.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw DomainError("cannot read element \"" + tok + "\" in --through " + s);
      }
    }
    out.push_back(make_set(es));
  }
  return out;
}

Report matroid_info(const Options& o) {
  Matroid m = load_matroid(o);
  std::ostringstream t;
  IntPolynomial chi = char_poly(m), red = reduced_char_poly(m);
  Json j = matroid_to_json(m);
  j["rank"] = m.rank();
  j["simple"] = m.is_simple();
  j["char_poly"] = chi.coeffs;
  j["reduced_char_poly"] = red.coeffs;
  t << "n=" << m.size() << " rank=" << m.rank() << " simple=" << (m.is_simple() ? "yes" : "no") << "\n";
  t << "char_poly=" << chi.to_string() << "\n";
  t << "reduced_char_poly=" << red.to_string() << "\n";
  if (m.rank() == 3) {
    Json pts = Json::array();
    std::string names;
    for (ElementSet q : big_points(m)) {
      pts.push_back(elements(q));
      names += (names.empty() ? "" : " ") + set_to_string(q);
    }
    MissingRay mr = classify_missing_ray(m);
    j["big_points"] = pts;
    j["chi_bar_1"] = c2_point_multiplicity(m);
    j["missing_ray"] = to_string(mr.kind);
    j["saturated_triangle"] = has_saturated_triangle(m);
    t << "points=" << m.flats(2).size() << " big_points=" << (names.empty() ? "none" : names) << "\n";
    t << "chi_bar_1=" << c2_point_multiplicity(m) << "\n";
    t << "missing_ray=" << to_string(mr.kind) << "\n";
    t << "saturated_triangle=" << (has_saturated_triangle(m) ? "yes" : "no") << "\n";
  }
  return {j, t.str()};
}

Report matroid_split(const Options& o) {
  Matroid m = load_matroid(o);
  VertexSplit s = modification_vertex_split(m, parse_through(o.through));
  Json j = {{"before", s.before},
            {"after_interior", s.after_interior},
            {"after_boundary", s.after_boundary},
            {"divisor_rays", s.divisor_rays}};
  std::ostringstream t;
  t << "before=" << s.before << " after_interior=" << s.after_interior << " after_boundary=" << s.after_boundary
    << " divisor_rays=" << s.divisor_rays << "\n";
  return {j, t.str()};
}

Report fan_build(const Options& o) {
  FanPlane p = load_plane(o);
  LinkGraph g = link_graph(p);
  Json j = fan_to_json(p);
  long long k2 = K_squared(p), c2 = c2_mult_fan(p);
  j["ray_count"] = edge_count(p);
  j["face_count"] = face_count(p);
  j["link_edges"] = g.edges.size();
  j["K2"] = k2;
  j["c2"] = c2;
  j["missing_ray"] = to_string(classify_missing_ray(p.matroid).kind);
  std::ostringstream t;
  t << "rays=" << edge_count(p) << " faces=" << face_count(p) << "\n";
  t << "link graph: " << g.labels.size() << " vertices, " << g.edges.size() << " edges\n";
  t << "K2=" << k2 << " c2=" << c2 << "\n";
  for (std::size_t i = 0; i < p.rays.size(); ++i)
    t << "  ray " << i << " " << set_to_string(p.rays[i].flat) << " " << vec_to_string(p.rays[i].dir) << "\n";
  for (const auto& f : p.faces) t << "  face " << f.a << " " << f.b << "\n";
  return {j, t.str()};
}

Report fan_reconstruct(const Options& o) {
  if (o.fan.empty()) throw CLI::RequiredError("--fan");
  FanData f = fan_from_json(load_json(o.fan));
  Matroid m = reconstruct_matroid(f.dim, f.rays, f.cones, f.basis);
  std::ostringstream t;
  t << "n=" << m.size() << " rank=" << m.rank() << "\n";
  for (ElementSet q : big_points(m)) t << "  point " << set_to_string(q) << "\n";
  return {matroid_to_json(m), t.str()};
}

Report cycle_degree(const Options& o) {
  if (o.cycles.size() != 1) throw CLI::ValidationError("--cycle", "expects exactly one curve");
  FanPlane p = load_plane(o);
  FanCycle c = cycle_from_json(load_json(o.cycles[0]));
  bool balanced = is_balanced(c), inside = lies_in(p, c);
  Json j = cycle_to_json(c);
  j["balanced"] = balanced;
  j["in_plane"] = inside;
  std::ostringstream t;
  t << "balanced=" << (balanced ? "yes" : "no") << " in_plane=" << (inside ? "yes" : "no") << "\n";
  if (balanced && inside) {
    long long d = deg_delta(c, p.basis);
    j["deg"] = d;
    t << "deg=" << d << "\n";
    Json pts = Json::array();
    for (const auto& r : c.rays) {
      BoundaryPoint bp = boundary_point(r.dir, p);
      pts.push_back({{"dir", r.dir}, {"at_point", bp.at_point}, {"flat", elements(bp.flat)}});
      t << "  " << vec_to_string(r.dir) << " x" << r.weight << " ends at " << (bp.at_point ? "point " : "line ")
        << set_to_string(bp.flat) << "\n";
    }
    j["ends"] = pts;
  }
  return {j, t.str()};
}

Report intersect_curves(const Options& o) {
  if (o.cycles.size() != 2) throw CLI::ValidationError("--cycle", "expects two curves");
  FanPlane p = load_plane(o);
  FanCycle a = cycle_from_json(load_json(o.cycles[0]));
  FanCycle b = cycle_from_json(load_json(o.cycles[1]));
  IntersectionReport r = intersect(a, b, p);
  std::ostringstream t;
  t << "vertex=" << r.vertex << "\n";
  for (const auto& c : r.corners) t << "corner " << set_to_string(c.point) << " = " << c.multiplicity << "\n";
  t << "total=" << r.total << " = " << r.deg1 << " * " << r.deg2 << "\n";
  return {intersection_to_json(r), t.str()};
}

std::string ledger_text(const Surface& x) {
  std::ostringstream t;
  for (const auto& c : x.ledger) {
    std::vector<long long> v(c.curve.valencies.begin(), c.curve.valencies.end());
    t << "  " << c.id << ": b1=" << c.curve.b1 << " leaves=" << c.curve.leaf_count() << " valencies=["
      << ints(v) << "] self=" << c.self_intersection << (c.snc ? "" : " (not snc)") << "\n";
  }
  return t.str();
}

Report surface_noether(const Options& o, bool color) {
  Surface x = load_surface(o);
  NoetherReport n = noether_check(x);
  std::ostringstream t;
  t << "chi=" << x.triple.chi << " K2=" << x.triple.K2 << " c2=" << x.triple.c2 << "\n";
  t << "noether=" << verdict(n.pass, color) << " (12 chi = " << 12 * x.triple.chi
    << ", K2 + c2 = " << x.triple.K2 + x.triple.c2 << ")\n";
  return {surface_report(x), t.str()};
}

Report surface_ledger(const Options& o) {
  Surface x = load_surface(o);
  return {ledger_to_json(x.ledger), ledger_text(x)};
}

Report surface_adjunction(const Options& o, bool color) {
  Surface x = load_surface(o);
  Json j = Json::array();
  std::ostringstream t;
  bool all = true;
  for (const auto& c : x.ledger) {
    AdjunctionReport r = adjunction_check(x, c.id);
    all = all && r.pass;
    j.push_back(adjunction_to_json(r));
    t << c.id << ": K.C=" << r.k_dot_c << " C^2=" << r.self_intersection << " 2b1=" << 2 * r.b1 << " "
      << verdict(r.pass, color) << "\n";
  }
  t << "adjunction=" << verdict(all, color) << "\n";
  return {{{"curves", j}, {"adjunction", all ? "pass" : "fail"}}, t.str()};
}

Report surface_signature(const Options& o) {
  Surface x = load_surface(o);
  Rational s = signature_hypothesis(x);
  std::ostringstream t;
  t << "(K2 - 2 c2) / 3 = " << s.to_string() << "\n";
  return {{{"K2", x.triple.K2}, {"c2", x.triple.c2}, {"signature", s.to_string()}}, t.str()};
}

Report homology_diamond(const Options& o) {
  Diamond d = diamond(complex_from_json(load_complex_json(o)));
  return {diamond_to_json(d), diamond_text(d)};
}

Report homology_group(const Options& o) {
  CellComplex x = complex_from_json(load_complex_json(o));
  HomologyGroup h = homology(x, o.p, o.q);
  Json j = homology_to_json(h);
  j["p"] = o.p;
  j["q"] = o.q;
  return {j, "H" + std::to_string(o.p) + std::to_string(o.q) + " = " + h.to_string() + "\n"};
}

Report homology_pairing(const Options& o) {
  Json j = load_complex_json(o);
  Atlas atlas = atlas_from_json(j);
  std::map<std::string, OneOneCycle> cycles;
  for (auto& c : cycles_from_json(j)) cycles[c.name] = c;
  auto find = [&](const std::string& n) -> const OneOneCycle& {
    auto it = cycles.find(n);
    if (it == cycles.end()) throw DomainError("unknown cycle " + n);
    return it->second;
  };
  std::vector<PairingPoint> pts;
  long long v = intersection_pairing(find(o.a), find(o.b), atlas, &pts);
  std::ostringstream t;
  t << o.a << " . " << o.b << " = " << v << "\n";
  for (const auto& p : pts) t << "  " << p.face << " " << point_to_string(p.at) << ": " << p.contribution << "\n";
  return {pairing_to_json(o.a, o.b, v, pts), t.str()};
}

Report homology_signature(const Options& o) {
  Json j = load_complex_json(o);
  SignatureReport r = signature_1_1(atlas_from_json(j), basis_from_complex_json(j));
  std::ostringstream t;
  t << "gram:\n";
  for (const auto& row : r.gram) t << "  " << ints(row) << "\n";
  t << "signature=" << r.signature << " (+" << r.positive << ", -" << r.negative << ")\n";
  return {{{"gram", r.gram}, {"positive", r.positive}, {"negative", r.negative}, {"signature", r.signature}},
          t.str()};
}

void emit(const Report& r, const Options& o) {
  std::string body = o.json ? r.json.dump(2) + "\n" : r.text;
  if (o.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw DomainError("cannot write " + o.out);
  f << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of tropical surfaces"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit machine-readable JSON");
  app.add_option("--out", o.out, "Write the report to a file");
  std::function<Report()> run;
  bool color = false;

  auto verb = [&](const char* name, const char* help) {
    CLI::App* v = app.add_subcommand(name, help);
    v->require_subcommand(1);
    v->fallthrough();
    return v;
  };
  auto sub = [&](CLI::App* v, const char* name, const char* help, std::function<Report()> f) {
    CLI::App* s = v->add_subcommand(name, help);
    s->fallthrough();
    s->callback([&run, f] { run = f; });
    return s;
  };

  CLI::App* matroid = verb("matroid", "Matroid data");
  auto* mi = sub(matroid, "info", "Flats, characteristic polynomials and chi_bar(1)", [&] { return matroid_info(o); });
  mi->add_option("--matroid", o.matroid, "Matroid JSON")->required();
  auto* ms = sub(matroid, "split", "c2 vertex split under a single-element extension",
                 [&] { return matroid_split(o); });
  ms->add_option("--matroid", o.matroid, "Matroid JSON")->required();
  ms->add_option("--through", o.through, "Point the new element joins, e.g. 0,1 (repeatable)");

  CLI::App* fan = verb("fan", "Bergman fans");
  auto* fb = sub(fan, "build", "Coarse Bergman fan of a rank-3 matroid", [&] { return fan_build(o); });
  fb->add_option("--matroid", o.matroid, "Matroid JSON")->required();
  fb->add_option("--basis", o.basis, "Basis JSON [u_1, .., u_N]");
  auto* fr = sub(fan, "reconstruct", "Matroid from fan rays and cones", [&] { return fan_reconstruct(o); });
  fr->add_option("--fan", o.fan, "Fan JSON")->required();

  CLI::App* cycle = verb("cycle", "Fan curves");
  auto* cd = sub(cycle, "degree", "Balancing, degree and boundary points", [&] { return cycle_degree(o); });
  cd->add_option("--cycle", o.cycles, "Curve JSON")->required();
  cd->add_option("--matroid", o.matroid, "Matroid JSON")->required();
  cd->add_option("--basis", o.basis, "Basis JSON");

  CLI::App* inter = verb("intersect", "Intersections of fan curves");
  auto* ic = sub(inter, "curves", "Vertex and corner contributions", [&] { return intersect_curves(o); });
  ic->add_option("--cycle", o.cycles, "Curve JSON (twice)")->required();
  ic->add_option("--matroid", o.matroid, "Matroid JSON")->required();
  ic->add_option("--basis", o.basis, "Basis JSON");

  CLI::App* surface = verb("surface", "Surface expressions");
  for (auto [name, help, f] : std::vector<std::tuple<const char*, const char*, std::function<Report()>>>{
           {"noether", "Invariants and the Noether check", [&] { return surface_noether(o, color); }},
           {"ledger", "Boundary curves", [&] { return surface_ledger(o); }},
           {"adjunction", "Adjunction for every boundary curve", [&] { return surface_adjunction(o, color); }},
           {"signature", "(K^2 - 2 c2) / 3", [&] { return surface_signature(o); }}})
    sub(surface, name, help, f)->add_option("--expr", o.expr, "Surface expression JSON")->required();

  CLI::App* homology = verb("homology", "Tropical (p,q)-homology");
  sub(homology, "diamond", "All groups H_{p,q}", [&] { return homology_diamond(o); })
      ->add_option("--complex", o.complex, "Complex JSON")
      ->required();
  auto* hg = sub(homology, "group", "A single group H_{p,q}", [&] { return homology_group(o); });
  hg->add_option("--complex", o.complex, "Complex JSON")->required();
  hg->add_option("-p", o.p, "p")->required();
  hg->add_option("-q", o.q, "q")->required();
  auto* hp = sub(homology, "pairing", "Intersection of two (1,1)-cycles", [&] { return homology_pairing(o); });
  hp->add_option("--complex", o.complex, "Complex JSON")->required();
  hp->add_option("--a", o.a, "First cycle name")->required();
  hp->add_option("--b", o.b, "Second cycle name")->required();
  sub(homology, "signature", "Gram matrix of the listed basis", [&] { return homology_signature(o); })
      ->add_option("--complex", o.complex, "Complex JSON")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : 2;
  }
  color = use_color(o);
  try {
    emit(run(), o);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (o.json)
      std::cerr << Json{{"error", e.what()}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
