#pragma once

// Intersection pairing of (1,1)-cycles on compact tropical surfaces given by
// integral affine charts. Each 2-cell carries a convex polygon in its own
// chart; glued edges are identified by integral affine maps.

#include <array>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tropsurf/common.hpp"

namespace tropsurf {

using Q = boost::multiprecision::cpp_rational;
using Point2 = std::array<Q, 2>;
using Mat2 = std::array<std::array<long long, 2>, 2>;

struct ChartFace {
  std::string id;
  std::vector<Point2> polygon;  // convex, counterclockwise
};

// x in the edge from_edge of face `from` is identified with linear * x + shift in face `to`.
struct Gluing {
  std::string from;
  std::array<Point2, 2> from_edge;
  std::string to;
  Mat2 linear{};
  Point2 shift{};
};

struct Atlas {
  std::vector<ChartFace> faces;
  std::vector<Gluing> gluings;  // the inverse of each gluing is implied

  const ChartFace& face(const std::string& id) const;
};

void validate_atlas(const Atlas& a);

// A straight (1,1)-cell: an oriented segment inside one face with coefficient beta.
struct CyclePiece {
  std::string face;
  Point2 from;
  Point2 to;
  IntVec beta;
};

struct OneOneCycle {
  std::string name;
  std::vector<CyclePiece> pieces;
};

// Sum of transported boundary coefficients at every endpoint class; empty when closed.
std::vector<std::string> boundary_defects(const Atlas& a, const OneOneCycle& c);
bool is_closed(const Atlas& a, const OneOneCycle& c);

struct PairingPoint {
  std::string face;
  Point2 at;
  long long contribution = 0;
};

// Sum over transversal intersection points of sign(det(t1, t2)) det(beta1, beta2).
// Throws if the supports meet non-transversally.
long long intersection_pairing(const OneOneCycle& a, const OneOneCycle& b, const Atlas& x,
                               std::vector<PairingPoint>* points = nullptr);

// Weighted segments of a tropical 1-cycle, each inside one face.
struct WeightedEdge {
  std::string face;
  Point2 from;
  Point2 to;
  long long weight = 1;
};
// Coefficient of each edge = weight times its primitive direction; throws unless the result is closed.
OneOneCycle cycle_map(const Atlas& a, const std::string& name, const std::vector<WeightedEdge>& edges);

// A basis element with a disjoint parallel copy used for self-pairings.
struct BasisCycle {
  OneOneCycle cycle;
  OneOneCycle pushoff;
};

struct SignatureReport {
  std::vector<std::vector<long long>> gram;
  int positive = 0;
  int negative = 0;
  int signature = 0;
};
SignatureReport signature_1_1(const Atlas& a, const std::vector<BasisCycle>& basis);
// Inertia of a symmetric integer matrix.
std::pair<int, int> inertia(const std::vector<std::vector<long long>>& m);

std::string point_to_string(const Point2& p);

}  // namespace tropsurf
