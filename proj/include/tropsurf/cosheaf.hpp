#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropsurf/common.hpp"

namespace tropsurf {

using IntMatrix = std::vector<std::vector<long long>>;  // row-major

struct Cell {
  std::string id;
  int dim = 0;
  bool operator==(const Cell& o) const = default;
};

// Face relation big > small with an orientation sign and the coefficient map
// iota1 : F1(big) -> F1(small), a rank(small) x rank(big) matrix. A pair of
// cells may be incident more than once (a loop edge has both ends at one vertex).
struct Incidence {
  std::string big;
  std::string small;
  int sign = 1;
  IntMatrix iota1;
  bool operator==(const Incidence& o) const = default;
};

struct CellComplex {
  std::vector<Cell> cells;
  std::vector<Incidence> incidences;
  std::map<std::string, int> f1_rank;
  bool operator==(const CellComplex& o) const = default;

  int dim() const;
  const Cell& cell(const std::string& id) const;
};

// Checks ids, dimensions, incidence shapes and that every assembled complex squares to zero.
void validate_complex(const CellComplex& x);

// p-th exterior power: entries are the p x p minors, subsets in lexicographic order.
IntMatrix exterior_power(const IntMatrix& m, int rows, int cols, int p);
long long binomial(int n, int k);

struct ChainComplex {
  int p = 0;
  std::vector<std::vector<std::string>> cells;  // cells[q]: q-cells in input order
  std::vector<int> ranks;                       // rank of C_{p,q}
  std::vector<IntMatrix> D;                     // D[q] : C_{p,q} -> C_{p,q-1}; D[0] is empty
};

ChainComplex assemble(const CellComplex& x, int p);

struct HomologyGroup {
  long long free_rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1, each dividing the next
  bool operator==(const HomologyGroup& o) const = default;
  std::string to_string() const;
};

// Invariant factors (nonzero diagonal of the Smith normal form).
std::vector<long long> smith_invariants(const IntMatrix& m);

HomologyGroup homology(const ChainComplex& c, int q);
HomologyGroup homology(const CellComplex& x, int p, int q);

struct Diamond {
  int dim = 0;
  std::vector<std::vector<HomologyGroup>> h;  // h[p][q]
};
Diamond diamond(const CellComplex& x);
// Rows from the top (p + q = 2 dim) down, p increasing left to right.
std::string diamond_text(const Diamond& d);

}  // namespace tropsurf
