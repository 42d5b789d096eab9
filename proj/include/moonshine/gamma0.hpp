// Gamma0(N) membership, canonical cusp representatives, cusp classes,
// equivalence witnesses, widths and index.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "moonshine/exact.hpp"

namespace ms {

inline bool in_gamma0(const Mat2& m, const Int& n) {
  return m.is_integral() && m.det() == 1 && mod_z(m.c.get_num(), n) == 0;
}

// An SL2(Z) matrix whose first column is the cusp (A * inf = c).
inline Mat2 sl2_lift(const Cusp& c) {
  if (c.inf) return Mat2::identity();
  Int g, d, nb;
  mpz_gcdext(g.get_mpz_t(), d.get_mpz_t(), nb.get_mpz_t(), c.x.get_mpz_t(),
             c.y.get_mpz_t());
  // x*d + y*nb = 1, so det(x, -nb; y, d) = 1.
  return Mat2(Rat(c.x), Rat(-nb), Rat(c.y), Rat(d));
}

// Solve coeff * k == rhs (mod n); least non-negative solution.
inline std::optional<Int> solve_linear_congruence(const Int& coeff, const Int& rhs,
                                                  const Int& n) {
  Int c = mod_z(coeff, n), r = mod_z(rhs, n);
  Int g = gcd_z(c, n);
  if (g == 0) return r == 0 ? std::optional<Int>(0) : std::nullopt;  // n == 0 never here
  if (mod_z(r, g) != 0) return std::nullopt;
  Int n1 = n / g;
  if (n1 == 1) return Int(0);
  return mod_z(inv_mod(c / g, n1) * (r / g), n1);
}

// Witness-based equivalence: every gamma with gamma*c1 = c2 has the form
// +-A2 * T^k * A1^-1 with A_i = sl2_lift(c_i), and the lower-left entry of
// that product is y2*d1 - d2*y1 - k*y1*y2, so membership in Gamma0(N) is a
// single linear congruence in k.  This is an exact decision procedure.
inline std::optional<Mat2> cusp_equivalent(const Cusp& c1, const Cusp& c2, const Int& n) {
  Mat2 a1 = sl2_lift(c1), a2 = sl2_lift(c2);
  const Int y1 = a1.c.get_num(), d1 = a1.d.get_num();
  const Int y2 = a2.c.get_num(), d2 = a2.d.get_num();
  auto k = solve_linear_congruence(y1 * y2, y2 * d1 - d2 * y1, n);
  if (!k) return std::nullopt;
  Mat2 t(Rat(1), Rat(*k), Rat(0), Rat(1));
  Mat2 gamma = a2 * t * a1.inverse();
  if (!in_gamma0(gamma, n) || mat_act(gamma, c1) != c2)
    throw std::logic_error("cusp_equivalent: witness verification failed");
  return gamma;
}

// A Gamma0(N)-cusp class: denominator d | N, residue r modulo gcd(d, N/d).
struct CuspClass {
  Int level;  // N
  Int d;      // canonical denominator, d | N
  Int r;      // residue mod gcd(d, N/d), unit mod the gcd (0 when gcd = 1)

  bool operator==(const CuspClass& o) const {
    return level == o.level && d == o.d && r == o.r;
  }
  // Representative cusp: least r' >= 0 with r' == r (mod g) and gcd(r', d) = 1.
  Cusp representative() const {
    Int g = gcd_z(d, level / d);
    Int rp = r;
    while (gcd_z(rp, d) != 1) rp += g;
    return Cusp(rp, d);
  }
};

// Canonical class of a cusp plus a witness mapping the cusp to the class
// representative.  Infinity counts as y = 0, so its denominator is N.
inline std::pair<CuspClass, Mat2> canonical_cusp(const Cusp& c, const Int& n) {
  Int d = c.inf ? n : gcd_z(n, c.y);
  Int g = gcd_z(d, n / d);
  for (Int r = 0; r < g; ++r) {
    if (g > 1 && gcd_z(r, g) != 1) continue;
    CuspClass cls{n, d, r};
    if (auto w = cusp_equivalent(c, cls.representative(), n)) return {cls, *w};
  }
  throw std::logic_error("canonical_cusp: no residue class matched");
}

inline std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<CuspClass> cusp_classes(const Int& n) {
  std::vector<CuspClass> out;
  for (const Int& d : divisors(n)) {
    Int g = gcd_z(d, n / d);
    for (Int r = 0; r < g; ++r) {
      if (g > 1 && gcd_z(r, g) != 1) continue;
      out.push_back(CuspClass{n, d, r});
    }
  }
  return out;
}

inline Int cusp_width(const Cusp& c, const Int& n) {
  Int d = c.inf ? n : gcd_z(n, c.y);
  return n / gcd_z(d * d, n);
}

// Prime factorization by trial division (all inputs here are {2..71}-smooth
// or small enough for this to be instant).
inline std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline Int gamma0_index(const Int& n) {
  Int idx = n;
  for (auto& [p, e] : factorize(n)) idx += idx / p;  // multiply by (1 + 1/p)
  return idx;
}

}  // namespace ms
