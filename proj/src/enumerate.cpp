#include <algorithm>
#include <map>

#include "tropsurf/matroid.hpp"

namespace tropsurf {

namespace {

// Two points may share at most one element.
bool compatible(ElementSet a, ElementSet b) { return set_size(a & b) <= 1; }

void extend_families(const std::vector<ElementSet>& cand, std::size_t start, std::vector<ElementSet>& chosen,
                     int n, std::vector<Matroid>& out) {
  out.push_back(from_lines(n, chosen));
  for (std::size_t i = start; i < cand.size(); ++i) {
    bool ok = std::all_of(chosen.begin(), chosen.end(), [&](ElementSet c) { return compatible(c, cand[i]); });
    if (!ok) continue;
    chosen.push_back(cand[i]);
    extend_families(cand, i + 1, chosen, n, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Matroid> simple_rank3_matroids(int n) {
  if (n < 3 || n > 9) throw DomainError("enumeration supports 3 <= n <= 9");
  const ElementSet E = full_set(n);
  std::vector<ElementSet> cand;
  for (ElementSet s = 1; s < E; ++s)
    if (set_size(s) >= 3) cand.push_back(s);
  std::vector<ElementSet> chosen;
  std::vector<Matroid> out;
  extend_families(cand, 0, chosen, n, out);
  return out;
}

std::vector<Matroid> simple_rank3_classes(int n) {
  std::map<std::vector<int>, std::vector<Matroid>> buckets;
  std::vector<Matroid> out;
  for (const Matroid& m : simple_rank3_matroids(n)) {
    std::vector<int> key;
    for (ElementSet p : big_points(m)) key.push_back(set_size(p));
    std::sort(key.begin(), key.end());
    auto& bucket = buckets[key];
    bool seen = std::any_of(bucket.begin(), bucket.end(), [&](const Matroid& o) { return is_isomorphic(m, o); });
    if (!seen) {
      bucket.push_back(m);
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace tropsurf
