#include "tropsurf/json_io.hpp"

#include <fstream>
#include <map>

namespace tropsurf {

namespace {

// Typed field access that reports schema violations as DomainError.
template <typename T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw DomainError(std::string("field \"") + key + "\" has the wrong type");
  }
}

template <typename T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return get<T>(j, key);
}

ElementSet set_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("a flat must be a list of elements");
  std::vector<int> xs;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw DomainError("elements must be integers");
    int v = e.get<int>();
    if (v < 0 || v >= kMaxElements) throw DomainError("element " + std::to_string(v) + " out of range");
    xs.push_back(v);
  }
  return make_set(xs);
}

Json set_to_json(ElementSet s) { return Json(elements(s)); }

const char* kind_key(SurfaceExpr::Kind k) {
  switch (k) {
    case SurfaceExpr::Kind::Toric: return "toric";
    case SurfaceExpr::Kind::Sum: return "sum";
    case SurfaceExpr::Kind::SelfSum: return "selfsum";
    case SurfaceExpr::Kind::Modify: return "modify";
    case SurfaceExpr::Kind::Contract: return "contract";
  }
  return "";
}

ExprPtr child(const Json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  return std::make_shared<const SurfaceExpr>(expr_from_json(j.at(key)));
}

Point2 point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("a point needs two coordinates");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json point_to_json(const Point2& p) { return Json::array({rational_to_json(p[0]), rational_to_json(p[1])}); }

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("invalid JSON in " + path + ": " + e.what());
  }
}

Matroid matroid_from_json(const Json& j) {
  int n = get<int>(j, "n");
  if (n < 0 || n > kMaxElements) throw DomainError("ground set size out of range");
  if (j.contains("lines")) {
    std::vector<ElementSet> pts;
    for (const auto& l : j.at("lines")) pts.push_back(set_from_json(l));
    return from_lines(n, pts);
  }
  const Json& f = j.contains("flats") ? j.at("flats") : throw DomainError("missing field \"flats\" or \"lines\"");
  if (!f.is_object()) throw DomainError("\"flats\" must map ranks to lists");
  std::vector<std::vector<ElementSet>> by_rank(f.size());
  for (const auto& [key, list] : f.items()) {
    std::size_t r;
    try {
      r = std::stoul(key);
    } catch (const std::exception&) {
      throw DomainError("flat rank \"" + key + "\" is not a number");
    }
    if (r >= by_rank.size()) throw DomainError("flat ranks must be 0..r without gaps");
    if (!list.is_array()) throw DomainError("flats of each rank must be a list");
    for (const auto& s : list) by_rank[r].push_back(set_from_json(s));
    if (r == 0 && list.empty()) by_rank[0].push_back(0);
  }
  return Matroid(n, by_rank);
}

Json matroid_to_json(const Matroid& m) {
  Json flats = Json::object();
  for (int r = 0; r <= m.rank(); ++r) {
    Json list = Json::array();
    for (ElementSet s : m.flats(r)) list.push_back(set_to_json(s));
    flats[std::to_string(r)] = list;
  }
  return {{"n", m.size()}, {"flats", flats}};
}

Basis basis_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("basis must be a list of vectors u_1..u_N");
  std::vector<IntVec> us;
  for (const auto& v : j) us.push_back(v.get<IntVec>());
  return make_basis(us);
}

FanData fan_from_json(const Json& j) {
  FanData f;
  f.dim = get<int>(j, "dim");
  if (!j.contains("rays") || !j.at("rays").is_array()) throw DomainError("missing field \"rays\"");
  for (const auto& r : j.at("rays")) {
    IntVec d = get<IntVec>(r, "dir");
    if (static_cast<int>(d.size()) != f.dim) throw DomainError("ray " + vec_to_string(d) + " has the wrong length");
    f.rays.push_back(d);
    if (r.contains("flat")) f.flats.push_back(set_from_json(r.at("flat")));
  }
  for (const auto& c : get<std::vector<std::vector<int>>>(j, "cones")) {
    if (c.size() != 2) throw DomainError("a cone is a pair of ray indices");
    for (int i : c)
      if (i < 0 || i >= static_cast<int>(f.rays.size())) throw DomainError("cone refers to a missing ray");
    f.cones.push_back({c[0], c[1]});
  }
  if (j.contains("basis")) f.basis = basis_from_json(j.at("basis"));
  return f;
}

Json fan_to_json(const FanPlane& p) {
  Json rays = Json::array(), cones = Json::array(), basis = Json::array();
  for (const auto& r : p.rays) rays.push_back({{"flat", set_to_json(r.flat)}, {"dir", r.dir}});
  for (const auto& f : p.faces) cones.push_back({f.a, f.b});
  for (int i = 1; i <= p.dim; ++i) basis.push_back(p.basis.u[i]);
  return {{"dim", p.dim}, {"rays", rays}, {"cones", cones}, {"basis", basis}};
}

FanCycle cycle_from_json(const Json& j) {
  int dim = get<int>(j, "dim");
  std::vector<CycleRay> rays;
  if (!j.contains("rays") || !j.at("rays").is_array()) throw DomainError("missing field \"rays\"");
  for (const auto& r : j.at("rays")) {
    IntVec d = get<IntVec>(r, "dir");
    if (static_cast<int>(d.size()) != dim) throw DomainError("ray " + vec_to_string(d) + " has the wrong length");
    rays.push_back({d, get_or<long long>(r, "weight", 1)});
  }
  return make_cycle(dim, rays);
}

Json cycle_to_json(const FanCycle& c) {
  Json rays = Json::array();
  for (const auto& r : c.rays) rays.push_back({{"dir", r.dir}, {"weight", r.weight}});
  return {{"dim", c.dim}, {"rays", rays}};
}

Json intersection_to_json(const IntersectionReport& r) {
  Json corners = Json::array();
  for (const auto& c : r.corners) corners.push_back({{"I", set_to_json(c.point)}, {"m", c.multiplicity}});
  return {{"vertex", r.vertex}, {"corners", corners}, {"total", r.total}, {"deg1", r.deg1}, {"deg2", r.deg2}};
}

SurfaceExpr expr_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw DomainError("a surface expression is an object with exactly one key");
  const std::string kind = j.begin().key();
  const Json& b = j.begin().value();
  SurfaceExpr e;
  if (kind == "toric") {
    e.kind = SurfaceExpr::Kind::Toric;
    if (b.contains("hirzebruch")) {
      e.fan = hirzebruch_fan(get<long long>(b, "hirzebruch"));
    } else if (b.contains("rays")) {
      for (const auto& r : get<std::vector<std::vector<long long>>>(b, "rays")) {
        if (r.size() != 2) throw DomainError("toric rays live in Z^2");
        e.fan.rays.push_back({r[0], r[1]});
      }
    } else {
      throw DomainError("toric node needs \"rays\" or \"hirzebruch\"");
    }
    for (int i : get_or<std::vector<int>>(b, "subdivide", {})) e.fan = star_subdivide(e.fan, i);
  } else if (kind == "sum") {
    e.kind = SurfaceExpr::Kind::Sum;
    e.left = child(b, "left");
    e.right = child(b, "right");
    e.curve1 = get<std::string>(b, "left_curve");
    e.curve2 = get<std::string>(b, "right_curve");
    e.leaf_map = get_or<std::vector<int>>(b, "leaf_map", {});
  } else if (kind == "selfsum") {
    e.kind = SurfaceExpr::Kind::SelfSum;
    e.left = child(b, "base");
    e.curve1 = get<std::string>(b, "curve1");
    e.curve2 = get<std::string>(b, "curve2");
    e.leaf_map = get_or<std::vector<int>>(b, "leaf_map", {});
  } else if (kind == "modify") {
    e.kind = SurfaceExpr::Kind::Modify;
    e.left = child(b, "base");
    const Json& c = b.contains("curve") ? b.at("curve") : throw DomainError("missing field \"curve\"");
    e.modify.id = get<std::string>(c, "id");
    e.modify.valencies = get_or<std::vector<int>>(c, "valencies", {});
    e.modify.hits = get<std::vector<std::string>>(c, "hits");
    e.modify.b1 = get_or<int>(c, "b1", 0);
    e.modify.self_intersection = get_or<long long>(c, "self_intersection", 0);
    e.modify.locally_degree_1 = get_or<bool>(b, "locally_degree_1", false);
  } else if (kind == "contract") {
    e.kind = SurfaceExpr::Kind::Contract;
    e.left = child(b, "base");
    e.curve1 = get<std::string>(b, "curve");
  } else {
    throw DomainError("unknown surface node \"" + kind + "\"");
  }
  return e;
}

Json expr_to_json(const SurfaceExpr& e) {
  Json b = Json::object();
  switch (e.kind) {
    case SurfaceExpr::Kind::Toric: {
      Json rays = Json::array();
      for (const auto& r : e.fan.rays) rays.push_back({r[0], r[1]});
      b["rays"] = rays;
      break;
    }
    case SurfaceExpr::Kind::Sum:
      b["left"] = expr_to_json(*e.left);
      b["right"] = expr_to_json(*e.right);
      b["left_curve"] = e.curve1;
      b["right_curve"] = e.curve2;
      if (!e.leaf_map.empty()) b["leaf_map"] = e.leaf_map;
      break;
    case SurfaceExpr::Kind::SelfSum:
      b["base"] = expr_to_json(*e.left);
      b["curve1"] = e.curve1;
      b["curve2"] = e.curve2;
      if (!e.leaf_map.empty()) b["leaf_map"] = e.leaf_map;
      break;
    case SurfaceExpr::Kind::Modify:
      b["base"] = expr_to_json(*e.left);
      b["curve"] = {{"id", e.modify.id},
                    {"valencies", e.modify.valencies},
                    {"hits", e.modify.hits},
                    {"b1", e.modify.b1},
                    {"self_intersection", e.modify.self_intersection}};
      b["locally_degree_1"] = e.modify.locally_degree_1;
      break;
    case SurfaceExpr::Kind::Contract:
      b["base"] = expr_to_json(*e.left);
      b["curve"] = e.curve1;
      break;
  }
  return {{kind_key(e.kind), b}};
}

Json ledger_to_json(const std::vector<LedgerCurve>& ledger) {
  Json out = Json::array();
  for (const auto& c : ledger)
    out.push_back({{"id", c.id},
                   {"b1", c.curve.b1},
                   {"valencies", c.curve.valencies},
                   {"leaves", c.curve.leaves},
                   {"K_C", c.curve.K_C_degree()},
                   {"self_intersection", c.self_intersection},
                   {"snc", c.snc}});
  return out;
}

Json surface_report(const Surface& x) {
  return {{"chi", x.triple.chi},
          {"K2", x.triple.K2},
          {"c2", x.triple.c2},
          {"noether", noether_check(x).pass ? "pass" : "fail"},
          {"ledger", ledger_to_json(x.ledger)}};
}

Json adjunction_to_json(const AdjunctionReport& r) {
  return {{"id", r.id},
          {"b1", r.b1},
          {"self_intersection", r.self_intersection},
          {"K_interior", r.k_interior},
          {"boundary_meetings", r.boundary_meetings},
          {"K_dot_C", r.k_dot_c},
          {"twice_rhs", r.twice_rhs},
          {"adjunction", r.pass ? "pass" : "fail"}};
}

CellComplex complex_from_json(const Json& j) {
  CellComplex x;
  if (!j.contains("cells") || !j.at("cells").is_array()) throw DomainError("missing field \"cells\"");
  for (const auto& c : j.at("cells")) x.cells.push_back({get<std::string>(c, "id"), get<int>(c, "dim")});
  if (j.contains("incidences")) {
    for (const auto& i : j.at("incidences"))
      x.incidences.push_back({get<std::string>(i, "big"), get<std::string>(i, "small"), get<int>(i, "sign"),
                              get<IntMatrix>(i, "iota1")});
  }
  x.f1_rank = get<std::map<std::string, int>>(j, "f1_rank");
  validate_complex(x);
  return x;
}

Json complex_to_json(const CellComplex& x) {
  Json cells = Json::array(), inc = Json::array();
  for (const auto& c : x.cells) cells.push_back({{"id", c.id}, {"dim", c.dim}});
  for (const auto& i : x.incidences)
    inc.push_back({{"big", i.big}, {"small", i.small}, {"sign", i.sign}, {"iota1", i.iota1}});
  return {{"cells", cells}, {"incidences", inc}, {"f1_rank", x.f1_rank}};
}

Json homology_to_json(const HomologyGroup& h) {
  return {{"free", h.free_rank}, {"torsion", h.torsion}, {"group", h.to_string()}};
}

Json diamond_to_json(const Diamond& d) {
  Json groups = Json::array();
  for (int p = 0; p <= d.dim; ++p)
    for (int q = 0; q <= d.dim; ++q) {
      Json g = homology_to_json(d.h[p][q]);
      g["p"] = p;
      g["q"] = q;
      groups.push_back(g);
    }
  return {{"dim", d.dim}, {"groups", groups}};
}

Json pairing_to_json(const std::string& a, const std::string& b, long long value,
                     const std::vector<PairingPoint>& points) {
  Json pts = Json::array();
  for (const auto& p : points) pts.push_back({{"face", p.face}, {"at", point_to_json(p.at)}, {"m", p.contribution}});
  return {{"left", a}, {"right", b}, {"value", value}, {"points", pts}};
}

Q rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Q(j.get<long long>());
  if (j.is_string()) {
    try {
      return Q(j.get<std::string>());
    } catch (const std::exception&) {
      throw DomainError("\"" + j.get<std::string>() + "\" is not a rational number");
    }
  }
  throw DomainError("coordinates must be integers or strings like \"1/2\"");
}

Json rational_to_json(const Q& q) {
  if (denominator(q) == 1) return Json(static_cast<long long>(numerator(q)));
  return Json(q.str());
}

Atlas atlas_from_json(const Json& j) {
  const Json& a = j.contains("atlas") ? j.at("atlas") : throw DomainError("complex file has no \"atlas\"");
  Atlas out;
  for (const auto& f : a.at("faces")) {
    ChartFace face;
    face.id = get<std::string>(f, "id");
    for (const auto& p : f.at("polygon")) face.polygon.push_back(point_from_json(p));
    out.faces.push_back(face);
  }
  for (const auto& g : get_or<Json>(a, "gluings", Json::array())) {
    Gluing gl;
    gl.from = get<std::string>(g, "from");
    gl.to = get<std::string>(g, "to");
    const Json& e = g.at("edge");
    if (!e.is_array() || e.size() != 2) throw DomainError("a glued edge has two endpoints");
    gl.from_edge = {point_from_json(e[0]), point_from_json(e[1])};
    auto lin = get<std::vector<std::vector<long long>>>(g, "linear");
    if (lin.size() != 2 || lin[0].size() != 2 || lin[1].size() != 2) throw DomainError("gluing map must be 2x2");
    gl.linear = {{{lin[0][0], lin[0][1]}, {lin[1][0], lin[1][1]}}};
    gl.shift = g.contains("shift") ? point_from_json(g.at("shift")) : Point2{Q(0), Q(0)};
    out.gluings.push_back(gl);
  }
  validate_atlas(out);
  return out;
}

std::vector<OneOneCycle> cycles_from_json(const Json& j) {
  std::vector<OneOneCycle> out;
  if (!j.contains("cycles")) return out;
  for (const auto& [name, pieces] : j.at("cycles").items()) {
    OneOneCycle c;
    c.name = name;
    for (const auto& p : pieces)
      c.pieces.push_back({get<std::string>(p, "face"), point_from_json(p.at("from")), point_from_json(p.at("to")),
                          get<IntVec>(p, "beta")});
    out.push_back(c);
  }
  return out;
}

std::vector<BasisCycle> basis_from_complex_json(const Json& j) {
  auto cycles = cycles_from_json(j);
  auto find = [&](const std::string& n) {
    for (const auto& c : cycles)
      if (c.name == n) return c;
    throw DomainError("unknown cycle " + n);
  };
  std::vector<BasisCycle> out;
  for (const auto& b : get_or<Json>(j, "basis", Json::array()))
    out.push_back({find(get<std::string>(b, "cycle")), find(get<std::string>(b, "pushoff"))});
  return out;
}

}  // namespace tropsurf
