#include "tropsurf/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace tropsurf {

std::string set_to_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string vec_to_string(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

IntPolynomial::IntPolynomial(std::vector<long long> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

long long IntPolynomial::eval(long long t) const {
  long long acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    long long c = coeffs[d];
    if (c == 0) continue;
    long long a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || d == 0) os << a;
    if (d >= 1) os << "t";
    if (d >= 2) os << "^" << d;
    first = false;
  }
  return os.str();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return IntPolynomial{};
  std::vector<long long> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return IntPolynomial(std::move(c));
}

Matroid::Matroid(int n, std::vector<std::vector<ElementSet>> flats_by_rank)
    : n_(n), flats_(std::move(flats_by_rank)) {
  if (n < 0 || n > kMaxElements) throw DomainError("element count out of range");
  if (flats_.empty()) throw DomainError("matroid needs at least one rank");
  const ElementSet E = full_set(n);
  std::unordered_map<ElementSet, int> rank_of_flat;
  for (int r = 0; r <= rank(); ++r) {
    auto& fs = flats_[r];
    if (fs.empty()) throw DomainError("no flats of rank " + std::to_string(r));
    std::sort(fs.begin(), fs.end());
    for (ElementSet f : fs) {
      if (!is_subset(f, E)) throw DomainError("flat " + set_to_string(f) + " leaves the ground set");
      if (!rank_of_flat.emplace(f, r).second) throw DomainError("flat " + set_to_string(f) + " listed twice");
    }
  }
  if (flats_[0].size() != 1) throw DomainError("rank-0 flat is not unique");
  if (flats_.back().size() != 1 || flats_.back()[0] != E)
    throw DomainError("top flat must be the whole ground set");

  std::vector<std::pair<ElementSet, int>> all(rank_of_flat.begin(), rank_of_flat.end());
  for (auto [a, ra] : all) {
    for (auto [b, rb] : all) {
      auto it = rank_of_flat.find(a & b);
      if (it == rank_of_flat.end())
        throw DomainError("intersection of " + set_to_string(a) + " and " + set_to_string(b) + " is not a flat");
      if (a != b && is_subset(a, b) && ra >= rb)
        throw DomainError("rank does not increase from " + set_to_string(a) + " to " + set_to_string(b));
    }
  }
  for (int r = 0; r < rank(); ++r) {
    for (ElementSet f : flats_[r]) {
      ElementSet covered = 0;
      for (ElementSet g : flats_[r + 1]) {
        if (!is_subset(f, g)) continue;
        ElementSet d = g & ~f;
        if (d == 0 || (covered & d)) throw DomainError("covering axiom fails above " + set_to_string(f));
        covered |= d;
      }
      if (covered != (E & ~f)) throw DomainError("covering axiom fails above " + set_to_string(f));
    }
    for (ElementSet g : flats_[r + 1]) {
      bool has_below = std::any_of(flats_[r].begin(), flats_[r].end(), [&](ElementSet f) { return is_subset(f, g); });
      if (!has_below) throw DomainError("flat " + set_to_string(g) + " covers no flat of lower rank");
    }
  }
}

int Matroid::rank_of(ElementSet s) const {
  for (int r = 0; r <= rank(); ++r)
    for (ElementSet f : flats_[r])
      if (is_subset(s, f)) return r;
  throw DomainError("subset " + set_to_string(s) + " is not inside the ground set");
}

ElementSet Matroid::closure(ElementSet s) const {
  for (int r = 0; r <= rank(); ++r)
    for (ElementSet f : flats_[r])
      if (is_subset(s, f)) return f;
  throw DomainError("subset " + set_to_string(s) + " is not inside the ground set");
}

int Matroid::flat_rank(ElementSet s) const {
  for (int r = 0; r <= rank(); ++r)
    if (std::binary_search(flats_[r].begin(), flats_[r].end(), s)) return r;
  return -1;
}

bool Matroid::is_flat(ElementSet s) const { return flat_rank(s) >= 0; }

bool Matroid::is_simple() const {
  if (!is_loopless()) return false;
  if (rank() == 0) return true;
  for (ElementSet f : flats_[1])
    if (set_size(f) != 1) return false;
  return true;
}

namespace {

void k_subsets(int n, int k, int start, ElementSet cur, std::vector<ElementSet>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - k; ++i) k_subsets(n, k - 1, i + 1, cur | singleton(i), out);
}

Matroid from_rank_function(int n, int top, const auto& rank_fn) {
  std::vector<std::vector<ElementSet>> flats(top + 1);
  const ElementSet E = full_set(n);
  for (ElementSet x = 0;; ++x) {
    int r = rank_fn(x);
    bool closed = true;
    for (int e : elements(E & ~x)) {
      if (rank_fn(x | singleton(e)) == r) {
        closed = false;
        break;
      }
    }
    if (closed) flats.at(r).push_back(x);
    if (x == E) break;
  }
  return Matroid(n, std::move(flats));
}

}  // namespace

Matroid uniform(int r, int n) {
  if (r <= 0 || r > n || n > 20) throw DomainError("uniform matroid needs 0 < r <= n <= 20");
  std::vector<std::vector<ElementSet>> flats(r + 1);
  for (int k = 0; k < r; ++k) k_subsets(n, k, 0, 0, flats[k]);
  flats[r] = {full_set(n)};
  return Matroid(n, std::move(flats));
}

Matroid from_lines(int n, const std::vector<ElementSet>& points) {
  if (n < 3 || n > kMaxElements) throw DomainError("rank-3 matroid needs 3 <= n <= 31 elements");
  const ElementSet E = full_set(n);
  std::set<ElementSet> pts;
  std::vector<std::vector<bool>> paired(n, std::vector<bool>(n, false));
  for (ElementSet p : points) {
    if (set_size(p) < 2) throw DomainError("point " + set_to_string(p) + " has fewer than 2 elements");
    if (!is_subset(p, E)) throw DomainError("point " + set_to_string(p) + " leaves the ground set");
    if (p == E) throw DomainError("a point containing every element gives rank 2, not 3");
    if (!pts.insert(p).second) throw DomainError("point " + set_to_string(p) + " listed twice");
    auto es = elements(p);
    for (std::size_t a = 0; a < es.size(); ++a)
      for (std::size_t b = a + 1; b < es.size(); ++b) {
        if (paired[es[a]][es[b]])
          throw DomainError("elements " + std::to_string(es[a]) + "," + std::to_string(es[b]) + " lie on two points");
        paired[es[a]][es[b]] = true;
      }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!paired[a][b]) pts.insert(singleton(a) | singleton(b));
  std::vector<std::vector<ElementSet>> flats(4);
  flats[0] = {0};
  for (int i = 0; i < n; ++i) flats[1].push_back(singleton(i));
  flats[2].assign(pts.begin(), pts.end());
  flats[3] = {E};
  return Matroid(n, std::move(flats));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.size() + b.size();
  if (n > kMaxElements) throw DomainError("direct sum exceeds the element limit");
  std::vector<std::vector<ElementSet>> flats(a.rank() + b.rank() + 1);
  for (int ra = 0; ra <= a.rank(); ++ra)
    for (ElementSet fa : a.flats(ra))
      for (int rb = 0; rb <= b.rank(); ++rb)
        for (ElementSet fb : b.flats(rb)) flats[ra + rb].push_back(fa | (fb << a.size()));
  return Matroid(n, std::move(flats));
}

Matroid parallel_connection(const Matroid& a, const Matroid& b, int base) {
  if (base < 0 || base >= a.size() || base >= b.size())
    throw DomainError("base element " + std::to_string(base) + " is not in both ground sets");
  const int n = a.size() + b.size() - 1;
  if (n > 20) throw DomainError("parallel connection too large");
  // Result label of each input element.
  std::vector<int> la(a.size()), lb(b.size());
  int next = 1;
  for (int i = 0; i < a.size(); ++i) la[i] = (i == base) ? 0 : next++;
  for (int i = 0; i < b.size(); ++i) lb[i] = (i == base) ? 0 : next++;
  auto split = [&](ElementSet x, ElementSet& xa, ElementSet& xb) {
    xa = xb = 0;
    for (int i = 0; i < a.size(); ++i)
      if (contains(x, la[i])) xa |= singleton(i);
    for (int i = 0; i < b.size(); ++i)
      if (contains(x, lb[i])) xb |= singleton(i);
  };
  const ElementSet pa = singleton(base), pb = singleton(base);
  auto rank_fn = [&](ElementSet x) {
    ElementSet xa, xb;
    split(x, xa, xb);
    int r1 = a.rank_of(xa) + b.rank_of(xb);
    int r2 = a.rank_of(xa | pa) + b.rank_of(xb | pb) - 1;
    return std::min(r1, r2);
  };
  return from_rank_function(n, a.rank() + b.rank() - 1, rank_fn);
}

Matroid delete_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) throw DomainError("element " + std::to_string(e) + " not in ground set");
  auto squeeze = [e](ElementSet s) {
    ElementSet low = s & (singleton(e) - 1);
    ElementSet high = (s >> (e + 1)) << e;
    return low | high;
  };
  const ElementSet rest = m.ground() & ~singleton(e);
  const int top = m.rank_of(rest);
  std::vector<std::set<ElementSet>> by_rank(top + 1);
  for (const auto& fs : m.flats_by_rank())
    for (ElementSet f : fs) {
      ElementSet g = f & ~singleton(e);
      by_rank[m.rank_of(g)].insert(squeeze(g));
    }
  std::vector<std::vector<ElementSet>> flats;
  for (auto& s : by_rank) flats.emplace_back(s.begin(), s.end());
  return Matroid(m.size() - 1, std::move(flats));
}

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != m.size()) throw DomainError("relabeling has the wrong length");
  ElementSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= m.size() || contains(seen, p)) throw DomainError("relabeling is not a bijection");
    seen |= singleton(p);
  }
  std::vector<std::vector<ElementSet>> flats;
  for (const auto& fs : m.flats_by_rank()) {
    std::vector<ElementSet> out;
    for (ElementSet f : fs) {
      ElementSet g = 0;
      for (int x : elements(f)) g |= singleton(perm[x]);
      out.push_back(g);
    }
    flats.push_back(std::move(out));
  }
  return Matroid(m.size(), std::move(flats));
}

std::vector<ElementSet> big_points(const Matroid& m) {
  if (m.rank() != 3) throw DomainError("points are defined here for rank-3 matroids");
  std::vector<ElementSet> out;
  for (ElementSet p : m.flats(2))
    if (set_size(p) >= 3) out.push_back(p);
  return out;
}

Matroid extend_by_line(const Matroid& m, const std::vector<ElementSet>& through) {
  if (m.rank() != 3 || !m.is_simple()) throw DomainError("extension needs a simple rank-3 matroid");
  const int e = m.size();
  ElementSet used = 0;
  for (ElementSet f : through) {
    if (m.flat_rank(f) != 2) throw DomainError(set_to_string(f) + " is not a point of the matroid");
    if (used & f) throw DomainError("chosen points share an element");
    used |= f;
  }
  std::vector<ElementSet> points;
  for (ElementSet p : m.flats(2)) {
    bool chosen = std::find(through.begin(), through.end(), p) != through.end();
    points.push_back(chosen ? (p | singleton(e)) : p);
  }
  for (int i = 0; i < e; ++i)
    if (!contains(used, i)) points.push_back(singleton(i) | singleton(e));
  return from_lines(e + 1, points);
}

IntPolynomial char_poly(const Matroid& m) {
  if (!m.is_loopless()) throw DomainError("characteristic polynomial needs a loopless matroid");
  const int r = m.rank();
  std::vector<long long> c(r + 1, 0);
  std::vector<std::pair<ElementSet, long long>> mu;
  for (int k = 0; k <= r; ++k) {
    for (ElementSet f : m.flats(k)) {
      long long v = 1;
      if (k > 0) {
        v = 0;
        for (auto& [g, mg] : mu)
          if (is_subset(g, f)) v -= mg;
      }
      c[r - k] += v;
      mu.emplace_back(f, v);
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial reduced_char_poly(const Matroid& m) {
  IntPolynomial chi = char_poly(m);
  const auto& c = chi.coeffs;
  if (c.empty()) throw DomainError("zero characteristic polynomial");
  const int d = chi.degree();
  std::vector<long long> q(std::max(d, 1), 0);
  if (d == 0) throw DomainError("characteristic polynomial is not divisible by t - 1");
  q[d - 1] = c[d];
  for (int k = d - 1; k >= 1; --k) q[k - 1] = c[k] + q[k];
  if (c[0] + q[0] != 0) throw DomainError("characteristic polynomial is not divisible by t - 1");
  return IntPolynomial(std::move(q));
}

long long c2_point_multiplicity(const Matroid& m) { return reduced_char_poly(m).eval(1); }

std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  const int n = a.size();
  for (int r = 0; r <= a.rank(); ++r)
    if (a.flats(r).size() != b.flats(r).size()) return std::nullopt;
  auto signature = [](const Matroid& m, int x) {
    std::vector<std::pair<int, int>> sig;
    for (int r = 0; r <= m.rank(); ++r)
      for (ElementSet f : m.flats(r))
        if (contains(f, x)) sig.emplace_back(r, set_size(f));
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  std::vector<std::vector<std::pair<int, int>>> sa(n), sb(n);
  for (int x = 0; x < n; ++x) {
    sa[x] = signature(a, x);
    sb[x] = signature(b, x);
  }
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  // Flats of a grouped by their largest element, checked once that element is placed.
  std::vector<std::vector<std::pair<ElementSet, int>>> closing(n);
  for (int r = 0; r <= a.rank(); ++r)
    for (ElementSet f : a.flats(r))
      if (f) closing[31 - std::countl_zero(f)].emplace_back(f, r);

  std::vector<int> perm(n, -1);
  ElementSet used = 0;
  auto rec = [&](auto&& self, int x) -> bool {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (contains(used, y) || sa[x] != sb[y]) continue;
      perm[x] = y;
      bool ok = true;
      for (auto [f, r] : closing[x]) {
        ElementSet g = 0;
        for (int e : elements(f)) g |= singleton(perm[e]);
        if (b.flat_rank(g) != r) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used |= singleton(y);
        if (self(self, x + 1)) return true;
        used &= ~singleton(y);
      }
      perm[x] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return perm;
  return std::nullopt;
}

}  // namespace tropsurf
