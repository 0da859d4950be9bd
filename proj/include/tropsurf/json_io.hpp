#pragma once

// JSON schemas for every input and report. Object keys are emitted in sorted
// order by nlohmann::json, so equal values serialize to identical bytes.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tropsurf/cosheaf.hpp"
#include "tropsurf/fan_intersect.hpp"
#include "tropsurf/pairing.hpp"
#include "tropsurf/surface.hpp"

namespace tropsurf {

using Json = nlohmann::json;

// Parses a file; throws DomainError for missing files and syntax errors.
Json load_json(const std::string& path);

// {"n", "flats": {"0": [[]], "1": [[..]], ...}} or the rank-3 shorthand {"n", "lines": [[..]]},
// where each entry of "lines" lists the elements on one point of size at least three.
Matroid matroid_from_json(const Json& j);
Json matroid_to_json(const Matroid& m);

// {"dim", "rays": [{"flat", "dir"}], "cones": [[a, b]]} with an optional "basis": [u_1, .., u_N].
struct FanData {
  int dim = 0;
  std::vector<IntVec> rays;
  std::vector<ElementSet> flats;  // empty when the input omits them
  std::vector<std::pair<int, int>> cones;
  std::optional<Basis> basis;
};
FanData fan_from_json(const Json& j);
Json fan_to_json(const FanPlane& p);
Basis basis_from_json(const Json& j);

// {"dim", "rays": [{"dir", "weight"}]}
FanCycle cycle_from_json(const Json& j);
Json cycle_to_json(const FanCycle& c);

Json intersection_to_json(const IntersectionReport& r);

// {"toric": {"rays": [[..]]}} with optional "subdivide": [i, ..], or {"toric": {"hirzebruch": k}},
// {"sum": {"left", "left_curve", "right", "right_curve", "leaf_map"}},
// {"selfsum": {"base", "curve1", "curve2", "leaf_map"}},
// {"modify": {"base", "curve": {"id", "valencies", "hits", "b1", "self_intersection"}, "locally_degree_1"}},
// {"contract": {"base", "curve"}}
SurfaceExpr expr_from_json(const Json& j);
Json expr_to_json(const SurfaceExpr& e);
Json ledger_to_json(const std::vector<LedgerCurve>& ledger);
Json surface_report(const Surface& x);
Json adjunction_to_json(const AdjunctionReport& r);

// {"cells": [{"id", "dim"}], "incidences": [{"big", "small", "sign", "iota1"}], "f1_rank": {id: r}}
CellComplex complex_from_json(const Json& j);
Json complex_to_json(const CellComplex& x);
Json homology_to_json(const HomologyGroup& h);
Json diamond_to_json(const Diamond& d);

// Optional parts of a complex file used by the pairing:
// "atlas": {"faces": [{"id", "polygon"}], "gluings": [{"from", "edge", "to", "linear", "shift"}]},
// "cycles": {name: [{"face", "from", "to", "beta"}]}, "basis": [{"cycle", "pushoff"}].
// Coordinates are integers or strings such as "1/2".
Atlas atlas_from_json(const Json& j);
std::vector<OneOneCycle> cycles_from_json(const Json& j);
std::vector<BasisCycle> basis_from_complex_json(const Json& j);
Json pairing_to_json(const std::string& a, const std::string& b, long long value,
                     const std::vector<PairingPoint>& points);
Q rational_from_json(const Json& j);
Json rational_to_json(const Q& q);

}  // namespace tropsurf
