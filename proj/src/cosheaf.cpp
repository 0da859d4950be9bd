#include "tropsurf/cosheaf.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>

namespace tropsurf {

using boost::multiprecision::cpp_int;

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

cpp_int det(std::vector<std::vector<cpp_int>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  cpp_int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::string join_ids(const std::vector<std::string>& ids) {
  std::string s;
  for (const auto& i : ids) s += (s.empty() ? "" : ", ") + i;
  return s;
}

void check_product_zero(const IntMatrix& a, const IntMatrix& b, int p, int q) {
  // a : C_{q-1} -> C_{q-2}, b : C_q -> C_{q-1}
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < (b.empty() ? 0 : b[0].size()); ++j) {
      cpp_int s = 0;
      for (std::size_t k = 0; k < b.size(); ++k) s += cpp_int(a[i][k]) * b[k][j];
      if (s != 0)
        throw DomainError("boundary does not square to zero for p = " + std::to_string(p) + " in degree " +
                          std::to_string(q));
    }
}

}  // namespace

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

IntMatrix exterior_power(const IntMatrix& m, int rows, int cols, int p) {
  auto rs = subsets(rows, p), cs = subsets(cols, p);
  IntMatrix out(rs.size(), std::vector<long long>(cs.size(), 0));
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      std::vector<std::vector<cpp_int>> sub(p, std::vector<cpp_int>(p));
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) sub[a][b] = m[rs[i][a]][cs[j][b]];
      out[i][j] = static_cast<long long>(det(sub));
    }
  return out;
}

int CellComplex::dim() const {
  int d = 0;
  for (const auto& c : cells) d = std::max(d, c.dim);
  return d;
}

const Cell& CellComplex::cell(const std::string& id) const {
  for (const auto& c : cells)
    if (c.id == id) return c;
  throw DomainError("unknown cell " + id);
}

void validate_complex(const CellComplex& x) {
  if (x.cells.empty()) throw DomainError("complex has no cells");
  std::set<std::string> ids;
  for (const auto& c : x.cells) {
    if (c.id.empty()) throw DomainError("cell with empty id");
    if (!ids.insert(c.id).second) throw DomainError("duplicate cell id " + c.id);
    if (c.dim < 0) throw DomainError("cell " + c.id + " has negative dimension");
    auto it = x.f1_rank.find(c.id);
    if (it == x.f1_rank.end()) throw DomainError("cell " + c.id + " has no f1_rank");
    if (it->second < 0) throw DomainError("cell " + c.id + " has negative f1_rank");
  }
  for (const auto& [id, r] : x.f1_rank)
    if (!ids.count(id)) throw DomainError("f1_rank given for unknown cell " + id);
  for (const auto& inc : x.incidences) {
    const Cell& b = x.cell(inc.big);
    const Cell& s = x.cell(inc.small);
    if (b.dim != s.dim + 1)
      throw DomainError("incidence " + inc.big + " > " + inc.small + " does not drop dimension by one");
    if (inc.sign != 1 && inc.sign != -1) throw DomainError("incidence sign must be +1 or -1");
    const int rb = x.f1_rank.at(inc.big), rs = x.f1_rank.at(inc.small);
    if (static_cast<int>(inc.iota1.size()) != rs)
      throw DomainError("iota1 of " + inc.big + " > " + inc.small + " needs " + std::to_string(rs) + " rows");
    for (const auto& row : inc.iota1)
      if (static_cast<int>(row.size()) != rb)
        throw DomainError("iota1 of " + inc.big + " > " + inc.small + " needs " + std::to_string(rb) + " columns");
  }
  int max_rank = 0;
  for (const auto& [id, r] : x.f1_rank) max_rank = std::max(max_rank, r);
  for (int p = 0; p <= max_rank; ++p) {
    ChainComplex c = assemble(x, p);
    for (int q = 2; q < static_cast<int>(c.D.size()); ++q) check_product_zero(c.D[q - 1], c.D[q], p, q);
  }
}

ChainComplex assemble(const CellComplex& x, int p) {
  const int d = x.dim();
  ChainComplex c;
  c.p = p;
  c.cells.assign(d + 1, {});
  for (const auto& cell : x.cells) c.cells[cell.dim].push_back(cell.id);
  std::map<std::string, int> offset;
  c.ranks.assign(d + 1, 0);
  for (int q = 0; q <= d; ++q)
    for (const auto& id : c.cells[q]) {
      offset[id] = c.ranks[q];
      c.ranks[q] += static_cast<int>(binomial(x.f1_rank.at(id), p));
    }
  c.D.assign(d + 1, {});
  for (int q = 1; q <= d; ++q) c.D[q].assign(c.ranks[q - 1], std::vector<long long>(c.ranks[q], 0));
  for (const auto& inc : x.incidences) {
    const int q = x.cell(inc.big).dim;
    const int rb = x.f1_rank.at(inc.big), rs = x.f1_rank.at(inc.small);
    IntMatrix block = exterior_power(inc.iota1, rs, rb, p);
    const int r0 = offset.at(inc.small), c0 = offset.at(inc.big);
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = 0; j < block[i].size(); ++j) c.D[q][r0 + i][c0 + j] += inc.sign * block[i][j];
  }
  return c;
}

std::vector<long long> smith_invariants(const IntMatrix& m0) {
  const int rows = static_cast<int>(m0.size());
  const int cols = rows ? static_cast<int>(m0[0].size()) : 0;
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = m0[i][j];
  std::vector<cpp_int> diag;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    // pivot: smallest nonzero absolute value in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        cpp_int q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        cpp_int q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  std::vector<long long> out;
  for (const auto& v : diag) out.push_back(static_cast<long long>(v));
  return out;
}

HomologyGroup homology(const ChainComplex& c, int q) {
  const int d = static_cast<int>(c.ranks.size()) - 1;
  if (q < 0 || q > d) return {};
  std::vector<long long> out_inv = q >= 1 ? smith_invariants(c.D[q]) : std::vector<long long>{};
  std::vector<long long> in_inv = q + 1 <= d ? smith_invariants(c.D[q + 1]) : std::vector<long long>{};
  HomologyGroup h;
  h.free_rank = c.ranks[q] - static_cast<long long>(out_inv.size()) - static_cast<long long>(in_inv.size());
  for (long long v : in_inv)
    if (v > 1) h.torsion.push_back(v);
  std::sort(h.torsion.begin(), h.torsion.end());
  return h;
}

HomologyGroup homology(const CellComplex& x, int p, int q) { return homology(assemble(x, p), q); }

std::string HomologyGroup::to_string() const {
  std::vector<std::string> parts;
  for (long long t : torsion) parts.push_back("Z/" + std::to_string(t));
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  if (parts.empty()) return "0";
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " + ") + p;
  return s;
}

Diamond diamond(const CellComplex& x) {
  validate_complex(x);
  Diamond d;
  d.dim = x.dim();
  d.h.assign(d.dim + 1, std::vector<HomologyGroup>(d.dim + 1));
  for (int p = 0; p <= d.dim; ++p) {
    ChainComplex c = assemble(x, p);
    for (int q = 0; q <= d.dim; ++q) d.h[p][q] = homology(c, q);
  }
  return d;
}

std::string diamond_text(const Diamond& d) {
  std::string out;
  for (int n = 2 * d.dim; n >= 0; --n) {
    std::vector<std::string> row;
    for (int p = 0; p <= d.dim; ++p) {
      int q = n - p;
      if (q < 0 || q > d.dim) continue;
      row.push_back("H" + std::to_string(p) + std::to_string(q) + " = " + d.h[p][q].to_string());
    }
    out += join_ids(row) + "\n";
  }
  return out;
}

}  // namespace tropsurf
