#include "tropsurf/pairing.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tropsurf {

using boost::multiprecision::cpp_int;

namespace {

Q cross(const Point2& a, const Point2& b) { return a[0] * b[1] - a[1] * b[0]; }
Point2 sub(const Point2& a, const Point2& b) { return {a[0] - b[0], a[1] - b[1]}; }

Point2 apply(const Mat2& m, const Point2& p, const Point2& shift) {
  return {m[0][0] * p[0] + m[0][1] * p[1] + shift[0], m[1][0] * p[0] + m[1][1] * p[1] + shift[1]};
}

long long det2(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

Mat2 inverse(const Mat2& m) {
  long long d = det2(m);  // +-1
  return Mat2{{{m[1][1] * d, -m[0][1] * d}, {-m[1][0] * d, m[0][0] * d}}};
}

constexpr Mat2 kIdentity{{{1, 0}, {0, 1}}};

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (cross(sub(b, a), sub(p, a)) != 0) return false;
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= p[1] &&
         p[1] <= std::max(a[1], b[1]);
}

// -1 outside, 0 on the boundary, 1 strictly inside
int locate(const Point2& p, const std::vector<Point2>& poly) {
  int result = 1;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Q c = cross(sub(poly[(i + 1) % poly.size()], poly[i]), sub(p, poly[i]));
    if (c < 0) return -1;
    if (c == 0) result = 0;
  }
  return result;
}

struct Node {
  std::string face;
  Point2 at;
  bool operator<(const Node& o) const { return std::tie(face, at) < std::tie(o.face, o.at); }
};

// Images of a boundary point in neighbouring charts, with the linear part of each move.
std::vector<std::pair<Node, Mat2>> moves(const Atlas& a, const Node& n) {
  std::vector<std::pair<Node, Mat2>> out;
  for (const auto& g : a.gluings) {
    if (g.from == n.face && on_segment(n.at, g.from_edge[0], g.from_edge[1]))
      out.push_back({{g.to, apply(g.linear, n.at, g.shift)}, g.linear});
    if (g.to == n.face) {
      Point2 e0 = apply(g.linear, g.from_edge[0], g.shift), e1 = apply(g.linear, g.from_edge[1], g.shift);
      if (on_segment(n.at, e0, e1)) {
        Mat2 inv = inverse(g.linear);
        Point2 back = apply(inv, sub(n.at, g.shift), {Q(0), Q(0)});
        out.push_back({{g.from, back}, inv});
      }
    }
  }
  return out;
}

// Canonical representative of the class of n and the transport into its chart.
std::pair<Node, Mat2> canonical(const Atlas& a, const Node& n) {
  std::map<Node, Mat2> seen = {{n, kIdentity}};
  std::deque<Node> todo = {n};
  while (!todo.empty()) {
    Node cur = todo.front();
    todo.pop_front();
    for (const auto& [next, m] : moves(a, cur))
      if (!seen.count(next)) {
        seen.emplace(next, mul(m, seen.at(cur)));
        todo.push_back(next);
      }
  }
  return *seen.begin();
}

IntVec transport(const Mat2& m, const IntVec& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

void check_piece(const Atlas& a, const CyclePiece& p) {
  const ChartFace& f = a.face(p.face);
  if (p.beta.size() != 2) throw DomainError("coefficients must lie in a rank-2 lattice");
  if (p.from == p.to) throw DomainError("degenerate cycle piece at " + point_to_string(p.from));
  if (locate(p.from, f.polygon) < 0 || locate(p.to, f.polygon) < 0)
    throw DomainError("cycle piece leaves face " + p.face);
}

int sign_of(const Q& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

std::string point_to_string(const Point2& p) {
  return "(" + p[0].str() + "," + p[1].str() + ")";
}

const ChartFace& Atlas::face(const std::string& id) const {
  for (const auto& f : faces)
    if (f.id == id) return f;
  throw DomainError("unknown face " + id);
}

void validate_atlas(const Atlas& a) {
  std::set<std::string> ids;
  for (const auto& f : a.faces) {
    if (!ids.insert(f.id).second) throw DomainError("duplicate face " + f.id);
    const auto& p = f.polygon;
    if (p.size() < 3) throw DomainError("face " + f.id + " needs at least three vertices");
    for (std::size_t i = 0; i < p.size(); ++i)
      if (cross(sub(p[(i + 1) % p.size()], p[i]), sub(p[(i + 2) % p.size()], p[(i + 1) % p.size()])) <= 0)
        throw DomainError("face " + f.id + " is not strictly convex and counterclockwise");
  }
  auto is_edge = [](const std::vector<Point2>& p, const Point2& x, const Point2& y) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Point2& u = p[i];
      const Point2& v = p[(i + 1) % p.size()];
      if ((u == x && v == y) || (u == y && v == x)) return true;
    }
    return false;
  };
  for (const auto& g : a.gluings) {
    const ChartFace& f = a.face(g.from);
    const ChartFace& t = a.face(g.to);
    if (std::abs(det2(g.linear)) != 1) throw DomainError("gluing map is not integral affine invertible");
    if (!is_edge(f.polygon, g.from_edge[0], g.from_edge[1]))
      throw DomainError("glued segment is not an edge of face " + g.from);
    Point2 e0 = apply(g.linear, g.from_edge[0], g.shift), e1 = apply(g.linear, g.from_edge[1], g.shift);
    if (!is_edge(t.polygon, e0, e1)) throw DomainError("glued segment does not land on an edge of face " + g.to);
  }
}

std::vector<std::string> boundary_defects(const Atlas& a, const OneOneCycle& c) {
  std::map<Node, IntVec> total;
  auto add = [&](const std::string& face, const Point2& at, const IntVec& beta, long long s) {
    auto [rep, m] = canonical(a, {face, at});
    IntVec t = transport(m, beta);
    auto& acc = total.try_emplace(rep, IntVec{0, 0}).first->second;
    acc[0] += s * t[0];
    acc[1] += s * t[1];
  };
  for (const auto& p : c.pieces) {
    check_piece(a, p);
    add(p.face, p.to, p.beta, 1);
    add(p.face, p.from, p.beta, -1);
  }
  std::vector<std::string> out;
  for (const auto& [n, v] : total)
    if (!is_zero(v)) out.push_back(n.face + " " + point_to_string(n.at) + ": " + vec_to_string(v));
  return out;
}

bool is_closed(const Atlas& a, const OneOneCycle& c) { return boundary_defects(a, c).empty(); }

long long intersection_pairing(const OneOneCycle& a, const OneOneCycle& b, const Atlas& x,
                               std::vector<PairingPoint>* points) {
  long long total = 0;
  for (const auto& p : a.pieces) {
    check_piece(x, p);
    for (const auto& q : b.pieces) {
      check_piece(x, q);
      if (p.face != q.face) continue;
      Point2 d1 = sub(p.to, p.from), d2 = sub(q.to, q.from);
      Point2 w = sub(q.from, p.from);
      Q den = cross(d1, d2);
      if (den == 0) {
        if (cross(d1, w) != 0) continue;  // parallel lines
        // collinear: any shared point is non-transversal
        bool touch = on_segment(q.from, p.from, p.to) || on_segment(q.to, p.from, p.to) ||
                     on_segment(p.from, q.from, q.to) || on_segment(p.to, q.from, q.to);
        if (touch) throw DomainError(a.name + " and " + b.name + " overlap in face " + p.face);
        continue;
      }
      Q s = cross(w, d2) / den, t = cross(w, d1) / den;
      if (s < 0 || s > 1 || t < 0 || t > 1) continue;
      Point2 at = {p.from[0] + s * d1[0], p.from[1] + s * d1[1]};
      if (s == 0 || s == 1 || t == 0 || t == 1)
        throw DomainError(a.name + " and " + b.name + " meet at a cell endpoint " + point_to_string(at));
      if (locate(at, x.face(p.face).polygon) != 1)
        throw DomainError(a.name + " and " + b.name + " meet on the boundary of face " + p.face);
      long long db = p.beta[0] * q.beta[1] - p.beta[1] * q.beta[0];
      long long c = sign_of(den) * db;
      total += c;
      if (points) points->push_back({p.face, at, c});
    }
  }
  return total;
}

OneOneCycle cycle_map(const Atlas& a, const std::string& name, const std::vector<WeightedEdge>& edges) {
  OneOneCycle c;
  c.name = name;
  for (const auto& e : edges) {
    if (e.weight == 0) continue;
    Point2 d = sub(e.to, e.from);
    cpp_int l = 1;
    for (const auto& v : d) l = boost::multiprecision::lcm(l, denominator(v));
    cpp_int x = numerator(d[0] * Q(l)), y = numerator(d[1] * Q(l));
    cpp_int g = boost::multiprecision::gcd(x, y);
    if (g == 0) throw DomainError("degenerate edge at " + point_to_string(e.from));
    IntVec beta = {static_cast<long long>(x / g) * e.weight, static_cast<long long>(y / g) * e.weight};
    c.pieces.push_back({e.face, e.from, e.to, beta});
  }
  auto defects = boundary_defects(a, c);
  if (!defects.empty()) throw DomainError("1-cycle " + name + " is not balanced at " + defects.front());
  return c;
}

std::pair<int, int> inertia(const std::vector<std::vector<long long>>& m) {
  const int n = static_cast<int>(m.size());
  // characteristic polynomial by Faddeev-LeVerrier: c[k] is the coefficient of x^k
  std::vector<Q> c(n + 1, Q(0));
  c[n] = 1;
  std::vector<std::vector<Q>> M(n, std::vector<Q>(n, Q(0)));  // M_k
  std::vector<std::vector<Q>> A(n, std::vector<Q>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = m[i][j];
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<Q>> next(n, std::vector<Q>(n, Q(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) next[i][j] += A[i][l] * M[l][j];
        if (i == j) next[i][j] += c[n - k + 1];
      }
    M = next;
    Q tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / k;
  }
  // all roots are real, so Descartes' rule counts them exactly
  auto changes = [](const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  std::vector<int> pos, neg;
  for (int k = n; k >= 0; --k) {
    pos.push_back(sign_of(c[k]));
    neg.push_back(sign_of(c[k]) * (k % 2 ? -1 : 1));
  }
  return {changes(pos), changes(neg)};
}

SignatureReport signature_1_1(const Atlas& a, const std::vector<BasisCycle>& basis) {
  const int n = static_cast<int>(basis.size());
  SignatureReport r;
  r.gram.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        r.gram[i][j] = intersection_pairing(basis[i].cycle, basis[i].pushoff, a);
        continue;
      }
      try {
        r.gram[i][j] = intersection_pairing(basis[i].cycle, basis[j].cycle, a);
      } catch (const DomainError&) {
        r.gram[i][j] = intersection_pairing(basis[i].cycle, basis[j].pushoff, a);
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (r.gram[i][j] != r.gram[j][i]) throw DomainError("Gram matrix is not symmetric; check the representatives");
  auto [p, q] = inertia(r.gram);
  r.positive = p;
  r.negative = q;
  r.signature = p - q;
  return r;
}

}  // namespace tropsurf
