#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropsurf/common.hpp"

namespace tropsurf {

// Dense integer polynomial, coefficient index = degree.
struct IntPolynomial {
  std::vector<long long> coeffs;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  long long eval(long long t) const;
  std::string to_string() const;
  bool operator==(const IntPolynomial& o) const = default;
};

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

// A matroid stored by its flats, grouped by rank. For rank-3 matroids the
// rank-2 flats are called points and the rank-1 flats lines, following the
// dual picture of a line arrangement in the projective plane.
class Matroid {
 public:
  // Validates the flat axioms and throws DomainError on failure.
  Matroid(int n, std::vector<std::vector<ElementSet>> flats_by_rank);

  int size() const { return n_; }
  int rank() const { return static_cast<int>(flats_.size()) - 1; }
  ElementSet ground() const { return full_set(n_); }
  const std::vector<std::vector<ElementSet>>& flats_by_rank() const { return flats_; }
  const std::vector<ElementSet>& flats(int r) const { return flats_.at(r); }

  int rank_of(ElementSet s) const;
  ElementSet closure(ElementSet s) const;
  bool is_flat(ElementSet s) const;
  // Rank of a flat, or -1 if s is not a flat.
  int flat_rank(ElementSet s) const;

  bool is_loopless() const { return flats_[0][0] == 0; }
  bool is_simple() const;

  bool operator==(const Matroid& o) const { return n_ == o.n_ && flats_ == o.flats_; }

 private:
  int n_;
  std::vector<std::vector<ElementSet>> flats_;
};

Matroid uniform(int r, int n);
// Rank-3 simple matroid from its points of size >= 2; missing pairs become doubleton points.
Matroid from_lines(int n, const std::vector<ElementSet>& points);
Matroid direct_sum(const Matroid& a, const Matroid& b);
// Elements: base -> 0, then the other elements of a, then the other elements of b.
Matroid parallel_connection(const Matroid& a, const Matroid& b, int base);
Matroid delete_element(const Matroid& m, int e);
// Relabel element i as perm[i].
Matroid relabel(const Matroid& m, const std::vector<int>& perm);
// New element n joins every listed point; the listed points must be disjoint.
Matroid extend_by_line(const Matroid& m, const std::vector<ElementSet>& through);

IntPolynomial char_poly(const Matroid& m);
IntPolynomial reduced_char_poly(const Matroid& m);
long long c2_point_multiplicity(const Matroid& m);

// Witness bijection (perm[i] = image of i) if one exists.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b);
inline bool is_isomorphic(const Matroid& a, const Matroid& b) { return find_isomorphism(a, b).has_value(); }

// Points of a rank-3 matroid with at least three elements.
std::vector<ElementSet> big_points(const Matroid& m);

// Every simple rank-3 matroid on exactly n labeled elements.
std::vector<Matroid> simple_rank3_matroids(int n);
// One representative per isomorphism class.
std::vector<Matroid> simple_rank3_classes(int n);

}  // namespace tropsurf
