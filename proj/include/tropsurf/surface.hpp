#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tropsurf/common.hpp"

namespace tropsurf {

using Vec2 = std::array<long long, 2>;

// Complete unimodular fan in R^2, rays in cyclic order.
struct Fan2D {
  std::vector<Vec2> rays;
  bool operator==(const Fan2D& o) const = default;
};

// Throws unless the fan is complete, unimodular and cyclically ordered.
void validate_fan(const Fan2D& fan);
// a_i with v_{i-1} + v_{i+1} = a_i v_i.
std::vector<long long> toric_a_values(const Fan2D& fan);
// Insert v_i + v_{i+1} between rays i and i+1 (the blow-up of a corner).
Fan2D star_subdivide(const Fan2D& fan, int i);
Fan2D projective_plane_fan();
Fan2D hirzebruch_fan(long long k);

// Combinatorial type of a connected curve. Leaves are named by the corner
// (boundary point of sedentarity two) where they end.
struct CurveDescriptor {
  std::vector<int> valencies;       // vertices that are not leaves
  std::vector<std::string> leaves;  // corner id of each leaf, in a fixed order
  int b1 = 0;

  int leaf_count() const { return static_cast<int>(leaves.size()); }
  long long K_C_degree() const;
  bool operator==(const CurveDescriptor& o) const = default;
};

// Same b1, leaf count and multiset of valencies other than 2.
bool descriptors_isomorphic(const CurveDescriptor& a, const CurveDescriptor& b);
// Throws unless K_C_degree = 2 b1 - 2.
void validate_descriptor(const CurveDescriptor& c);

struct LedgerCurve {
  std::string id;
  CurveDescriptor curve;
  long long self_intersection = 0;
  bool snc = true;
  bool operator==(const LedgerCurve& o) const = default;
};

struct InvariantTriple {
  long long chi = 0;
  long long K2 = 0;
  long long c2 = 0;
  bool operator==(const InvariantTriple& o) const = default;
};

struct SurfaceExpr;
using ExprPtr = std::shared_ptr<const SurfaceExpr>;

// Data for a modification along an interior curve: its leaves name the
// boundary curves they end on.
struct ModifySpec {
  std::string id;
  std::vector<int> valencies;
  std::vector<std::string> hits;
  int b1 = 0;
  long long self_intersection = 0;
  bool locally_degree_1 = false;
  bool operator==(const ModifySpec& o) const = default;
};

struct SurfaceExpr {
  enum class Kind { Toric, Sum, SelfSum, Modify, Contract };
  Kind kind = Kind::Toric;
  Fan2D fan;
  ExprPtr left;   // base for unary nodes
  ExprPtr right;
  std::string curve1;
  std::string curve2;
  std::vector<int> leaf_map;  // leaf k of curve1 meets leaf leaf_map[k] of curve2; empty means identity
  ModifySpec modify;
};

struct Surface {
  InvariantTriple triple;
  std::vector<LedgerCurve> ledger;  // sorted by id
  ExprPtr expr;

  const LedgerCurve& curve(const std::string& id) const;
};

Surface toric_surface(const Fan2D& fan);
Surface tropical_sum(const Surface& x1, const std::string& c1, const Surface& x2, const std::string& c2,
                     const std::vector<int>& leaf_map = {});
Surface self_sum(const Surface& x, const std::string& c1, const std::string& c2, const std::vector<int>& leaf_map = {});
Surface modify(const Surface& x, const ModifySpec& spec);
Surface contract_minus_one(const Surface& x, const std::string& e);

Surface evaluate(const SurfaceExpr& e);
// Evaluates and calls visit on every node's surface, children first.
Surface evaluate(const SurfaceExpr& e, const std::function<void(const SurfaceExpr&, const Surface&)>& visit);

struct NoetherReport {
  InvariantTriple triple;
  bool pass = false;
};
NoetherReport noether_check(const Surface& x);

struct AdjunctionReport {
  std::string id;
  int b1 = 0;
  long long self_intersection = 0;
  long long k_interior = 0;        // K^o . C from the augmented graph
  long long boundary_meetings = 0; // sum of D_i . C over other boundary curves
  long long k_dot_c = 0;
  long long twice_rhs = 0;         // K.C + C^2 + 2
  bool pass = false;
};
AdjunctionReport adjunction_check(const Surface& x, const std::string& id);

struct Rational {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rational& o) const = default;
  std::string to_string() const;
};
// (K^2 - 2 c2) / 3, the conjectural signature.
Rational signature_hypothesis(const Surface& x);

}  // namespace tropsurf
