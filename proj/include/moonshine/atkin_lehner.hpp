// Atkin-Lehner involutions W_e of Gamma0(N) and membership in the extended
// groups <Gamma0(N), W_e, W_f, ...>.
#pragma once

#include <optional>
#include <set>

#include "moonshine/gamma0.hpp"

namespace ms {

enum class WePrefer { a_is_1, d_is_1, any };

struct AtkinLehnerMatrix {
  Int level;  // N
  Int e;      // exact divisor of N
  Mat2 matrix;  // (a e, b; c N, d e) with a d e^2 - b c N = e
};

// Deterministic W_e with lower-left c*N (gcd(c, e) = 1 required): the
// smallest b >= 0 with b*c*(N/e) == -1 (mod e), then a = 1 (or d = 1).
inline AtkinLehnerMatrix build_we_c(const Int& n, const Int& e, const Int& c,
                                    WePrefer prefer = WePrefer::a_is_1) {
  if (!exactly_divides(e, n))
    throw std::domain_error("build_we: e must exactly divide N");
  if (gcd_z(c, e) != 1) throw std::domain_error("build_we: gcd(c, e) != 1");
  if (e == 1) return {n, e, Mat2::identity()};
  if (e == n && c == 1)
    return {n, e, Mat2(Rat(0), Rat(-1), Rat(n), Rat(0))};  // Fricke involution
  // Need e | 1 + b*c*(N/e); solvable since gcd(c*N/e, e) = 1.
  Int b = mod_z(-inv_mod(c * (n / e), e), e);
  if (b == 0) b = e;  // e | 1 impossible here (e > 1), so b >= 1
  Int ad = (1 + b * c * (n / e)) / e;
  Int a = 1, d = ad;
  if (prefer == WePrefer::d_is_1) {
    a = ad;
    d = 1;
  }
  Mat2 w(Rat(a * e), Rat(b), Rat(c * n), Rat(d * e));
  if (w.det() != e) throw std::logic_error("build_we: determinant check failed");
  return {n, e, w};
}

inline AtkinLehnerMatrix build_we(const Int& n, const Int& e,
                                  WePrefer prefer = WePrefer::a_is_1) {
  return build_we_c(n, e, 1, prefer);
}

// Detect membership of m (up to positive scalar) in the extended group
// <Gamma0(n), W_e : e in elist>: the primitive integer form must look like
// (a e, b; c n, d e) with det e for exactly one exact divisor e, and that e
// must be 1 or listed.
inline std::optional<Int> extended_member(const Mat2& m, const Int& n,
                                          const std::set<Int>& elist) {
  auto p = primitive_integer_form(m);
  if (!p) return std::nullopt;
  Mat2 w = *p;
  Rat dt = w.det();
  if (dt <= 0 || dt.get_den() != 1) return std::nullopt;
  Int e = dt.get_num();
  if (!exactly_divides(e, n)) return std::nullopt;
  if (mod_z(w.c.get_num(), n) != 0) return std::nullopt;
  if (mod_z(w.a.get_num(), e) != 0 || mod_z(w.d.get_num(), e) != 0) return std::nullopt;
  if (e != 1 && elist.find(e) == elist.end()) return std::nullopt;
  return e;
}

}  // namespace ms
