#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropsurf {

// Raised for every violated precondition or invalid input.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Subsets of the ground set {0..31} as bitmasks.
using ElementSet = std::uint32_t;
using IntVec = std::vector<long long>;

constexpr int kMaxElements = 31;

inline int set_size(ElementSet s) { return std::popcount(s); }
inline bool contains(ElementSet s, int e) { return (s >> e) & 1u; }
inline bool is_subset(ElementSet a, ElementSet b) { return (a & ~b) == 0; }
inline ElementSet singleton(int e) { return ElementSet{1} << e; }
inline ElementSet full_set(int n) { return n >= 32 ? ~ElementSet{0} : (ElementSet{1} << n) - 1; }

inline std::vector<int> elements(ElementSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline ElementSet make_set(const std::vector<int>& xs) {
  ElementSet s = 0;
  for (int x : xs) {
    if (x < 0 || x > kMaxElements) throw DomainError("element label out of range: " + std::to_string(x));
    s |= singleton(x);
  }
  return s;
}

std::string set_to_string(ElementSet s);

inline long long gcd_of(const IntVec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

inline bool is_zero(const IntVec& v) {
  for (long long x : v)
    if (x != 0) return false;
  return true;
}

std::string vec_to_string(const IntVec& v);

}  // namespace tropsurf
