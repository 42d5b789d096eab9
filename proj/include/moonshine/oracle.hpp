// Independent brute-force ground truth for cusp questions: the exact
// P1(Z/N) double-coset model, and a bounded union-find over explicit cusps
// moved by small group elements.  The P1 path is exact and is the
// tie-breaker; the union-find path documents the bounded-word caveat.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "moonshine/gamma0.hpp"

namespace ms {

inline void oracle_guard(const Int& n, long limit, const char* what) {
  if (n < 1 || n > limit)
    throw std::domain_error(std::string("oracle resource guard: ") + what +
                            " requires 1 <= N <= " + std::to_string(limit));
}

// Bottom row (y, d) mod N of an SL2(Z) lift of the cusp: the coset of
// Gamma0(N)\SL2(Z) containing the lift, as a point of P1(Z/N).
inline std::pair<long, long> p1_point(const Cusp& c, long n) {
  Mat2 a = sl2_lift(c);
  long y = mpz_fdiv_ui(a.c.get_num().get_mpz_t(), n);
  long d = mpz_fdiv_ui(a.d.get_num().get_mpz_t(), n);
  return {y, d};
}

inline std::vector<long> units_mod(long n) {
  std::vector<long> u;
  for (long x = 0; x < n; ++x)
    if (std::gcd(x, n) == 1) u.push_back(x);
  return u;
}

// Lexicographically least representative of (c:d) under unit scaling.
inline std::pair<long, long> p1_canon(long c, long d, long n, const std::vector<long>& units) {
  std::pair<long, long> best{n, n};
  for (long u : units) {
    std::pair<long, long> cand{(u * c) % n, (u * d) % n};
    if (cand < best) best = cand;
  }
  return best;
}

// Exact pairwise equivalence: c1 ~ c2 in Gamma0(N) iff the P1 point of c2
// lies in the T-orbit of the point of c1 (cusp classes are the double cosets
// Gamma0(N) \ SL2(Z) / <T>).
inline bool oracle_equivalent(const Cusp& c1, const Cusp& c2, const Int& n) {
  oracle_guard(n, 10000, "oracle_equivalent");
  long N = n.get_si();
  if (N == 1) return true;
  auto units = units_mod(N);
  auto [y1, d1] = p1_point(c1, N);
  auto [y2, d2] = p1_point(c2, N);
  auto target = p1_canon(y2, d2, N, units);
  // (y, d) * T^k = (y, d + k y): walk the whole orbit.
  for (long k = 0; k < N; ++k)
    if (p1_canon(y1, (d1 + k * y1) % N, N, units) == target) return true;
  return false;
}

// Number of cusp classes via the dense P1 model with T-orbit merging.
inline long oracle_cusp_count_p1(const Int& n) {
  oracle_guard(n, 3000, "oracle_cusp_count_p1");
  long N = n.get_si();
  if (N == 1) return 1;
  auto units = units_mod(N);
  std::vector<int32_t> label(static_cast<size_t>(N) * N, -1);
  int32_t next = 0;
  for (long c = 0; c < N; ++c)
    for (long d = 0; d < N; ++d) {
      if (std::gcd(std::gcd(c, d), N) != 1) continue;
      if (label[c * N + d] >= 0) continue;
      for (long u : units) label[((u * c) % N) * N + (u * d) % N] = next;
      ++next;
    }
  // union-find over point ids with edges (c,d) ~ (c, d+c)
  std::vector<int32_t> parent(next);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int32_t(int32_t)> find = [&](int32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (long c = 0; c < N; ++c)
    for (long d = 0; d < N; ++d) {
      int32_t a = label[c * N + d];
      if (a < 0) continue;
      int32_t b = label[c * N + (d + c) % N];
      a = find(a);
      b = find(b);
      if (a != b) parent[a] = b;
    }
  long components = 0;
  for (int32_t i = 0; i < next; ++i)
    if (find(i) == i) ++components;
  return components;
}

// Union-find over explicit cusps x/y (y <= 3N, x mod y, plus infinity).
// An element of Gamma0(N) is determined up to left T-powers by its bottom
// row (c, d) with N | c and gcd(c, d) = 1, and the image x'/y' of x/y has
// y' = cx + dy and x' well defined mod y'.  For every window cusp we merge
// with every image that stays inside the window, over |c| <= 6N.  The c
// bound means single steps between far-apart classes can be missed, so this
// path could in principle under-merge; agreement with the class solver and
// the P1 path is asserted by tests (exact for all N <= 120).
struct CuspUnionFind {
  long N;
  long ybound;
  std::vector<long> offset;    // offset[y] = start of row y in table
  std::vector<int32_t> table;  // table[offset[y] + x] = cusp id (gcd(x,y)=1)
  std::vector<int32_t> parent;
  long inf_id;

  explicit CuspUnionFind(const Int& n) {
    oracle_guard(n, 600, "cusp union-find");
    N = n.get_si();
    ybound = 3 * N;
    offset.assign(ybound + 1, 0);
    long total = 0;
    for (long y = 1; y <= ybound; ++y) {
      offset[y] = total;
      total += y;
    }
    table.assign(total, -1);
    int32_t next = 0;
    for (long y = 1; y <= ybound; ++y)
      for (long x = 0; x < y; ++x)
        if (std::gcd(x, y) == 1) table[offset[y] + x] = next++;
    inf_id = next++;
    parent.resize(next);
    std::iota(parent.begin(), parent.end(), 0);

    // infinity = 1/0 maps to a/c; with d = 0, ad - bc = 1 forces a = d^-1
    // handled below by the same bottom-row loop applied to (x, y) = (1, 0)
    for (long y = 0; y <= ybound; ++y)
      for (long x = (y == 0 ? 1 : 0); x < (y == 0 ? 2 : y); ++x) {
        if (y != 0 && std::gcd(x, y) != 1) continue;
        long me = (y == 0) ? inf_id : table[offset[y] + x];
        for (long k = -6; k <= 6; ++k) {
          if (k == 0) continue;
          long long c = static_cast<long long>(k) * N;
          // images y' = c x + d y must satisfy |y'| <= ybound
          long long lo = -static_cast<long long>(ybound) - c * x;
          long long hi = static_cast<long long>(ybound) - c * x;
          long long dlo, dhi;
          if (y == 0) {
            if (lo > 0 || hi < 0) continue;  // y' = c x fixed; d free, take one
            dlo = dhi = 1;
          } else {
            dlo = (lo >= 0) ? (lo + y - 1) / y : -((-lo) / y);
            dhi = (hi >= 0) ? hi / y : -((-hi + y - 1) / y);
          }
          for (long long d = dlo; d <= dhi; ++d) {
            if (std::gcd(std::llabs(c), std::llabs(d)) != 1) continue;
            long long a, b;
            egcd(d, -c, a, b);  // a d - b c = 1
            long long yp = c * x + d * y;
            long long xp = a * x + b * y;
            merge_ids(me, id_xy(xp, yp));
          }
        }
      }
  }

  static long long egcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
      x = (a < 0) ? -1 : 1;
      y = 0;
      return std::llabs(a);
    }
    long long x1, y1, g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
  }

  long id_xy(long long x, long long y) const {
    if (y == 0) return inf_id;
    if (y < 0) {
      x = -x;
      y = -y;
    }
    if (y > ybound) return -1;
    long long xm = ((x % y) + y) % y;  // T-translate into [0, y)
    if (y == 1) xm = 0;
    return table[offset[y] + xm];
  }

  long id_of(const Cusp& c) const {
    if (c.inf) return inf_id;
    if (c.y > ybound) return -1;
    long y = c.y.get_si();
    long x = mpz_fdiv_ui(c.x.get_mpz_t(), y);  // T-translate into [0, y)
    if (y == 1) x = 0;
    return table[offset[y] + x];
  }

  int32_t find(int32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void merge_ids(long ia, long ib) {
    if (ia < 0 || ib < 0) return;
    int32_t ra = find(static_cast<int32_t>(ia)), rb = find(static_cast<int32_t>(ib));
    if (ra != rb) parent[ra] = rb;
  }

  bool equivalent(const Cusp& a, const Cusp& b) {
    long ia = id_of(a), ib = id_of(b);
    if (ia < 0 || ib < 0) throw std::domain_error("cusp union-find: denominator out of range");
    return find(ia) == find(ib);
  }

  // Component count restricted to denominators <= N (every class has a
  // representative there; higher rows exist only to provide merge paths).
  long class_count() {
    std::set<int32_t> roots;
    roots.insert(find(inf_id));
    for (long y = 1; y <= N; ++y)
      for (long x = 0; x < y; ++x)
        if (std::gcd(x, y) == 1) roots.insert(find(table[offset[y] + x]));
    return static_cast<long>(roots.size());
  }
};

// Width by direct search: conjugate the cusp to infinity and find the least
// m >= 1 with A T^m A^-1 in Gamma0(N).
inline Int oracle_width(const Cusp& c, const Int& n) {
  oracle_guard(n, 10000, "oracle_width");
  Mat2 a = sl2_lift(c);
  Mat2 ainv = a.inverse();
  for (Int m = 1; m <= n; ++m) {
    Mat2 t(Rat(1), Rat(m), Rat(0), Rat(1));
    if (in_gamma0(a * t * ainv, n)) return m;
  }
  throw std::logic_error("oracle_width: no period found up to N");
}

}  // namespace ms
