// Cusp-moving matrices P_c, the upper-triangular U_{c,g}, the u_g congruence
// and pole exponents.
#pragma once

#include "moonshine/symbols.hpp"

namespace ms {

// Largest divisor of n supported exactly on the primes shared with y;
// always an exact divisor of n.
inline Int exact_part(const Int& n, const Int& y) {
  Int y0 = 1, m = n;
  Int g = gcd_z(m, y);
  while (g > 1) {
    y0 *= g;
    m /= g;
    g = gcd_z(m, g);
  }
  return y0;
}

// P_c in SL2(Z) of the form (x, w; y, z*N/y0) with P_c * inf = c.
// c = 0 is special-cased to (0, -1; 1, 0); otherwise z is the least-absolute
// representative >= 1 of the inverse class (ties broken positive).
inline Mat2 build_pc(const Cusp& c, const Int& n_chi) {
  if (c.inf) throw std::domain_error("build_pc: infinity has no P_c (use identity)");
  if (c.x == 0) return Mat2(Rat(0), Rat(-1), Rat(1), Rat(0));
  Int y0 = exact_part(n_chi, c.y);
  Int m = n_chi / y0;  // coprime to y, so x*z*m == 1 (mod y) is solvable
  Int z;
  if (c.y == 1) {
    z = 1;
  } else {
    z = inv_mod(mod_z(c.x * m, c.y), c.y);  // in [0, y)
    if (z == 0) z = c.y;
    if (2 * z > c.y) {
      Int neg = z - c.y;  // the negative representative
      if (-neg < z) z = neg;
    }
  }
  Int w = (c.x * z * m - 1) / c.y;
  Mat2 p(Rat(c.x), Rat(w), Rat(c.y), Rat(z * m));
  if (p.det() != 1) throw std::logic_error("build_pc: determinant check failed");
  return p;
}

// Bottom-right z-coefficient of P_c, i.e. the z with P_c = (x,w; y, z*N/y0).
inline Int pc_z_entry(const Mat2& pc, const Cusp& c, const Int& n_chi) {
  if (c.x == 0) return 0;
  Int m = n_chi / exact_part(n_chi, c.y);
  return pc.d.get_num() / m;
}

// The residue class of u solving (y/gcd(h,y)) u + (N_chi/y0) z == 0
// (mod (h/gcd(h,y)) e_g).  Returns (least non-negative residue, modulus).
inline std::pair<Int, Int> solve_ug(const GroupSymbol& sym, const Cusp& c,
                                    const Int& z_entry, const Int& n_chi) {
  auto e = cusp_equiv_infinity(c, sym);
  if (!e) throw std::domain_error("solve_ug: cusp not equivalent to infinity for symbol");
  if (c.inf) return {0, 1};
  Int g = gcd_z(sym.h, c.y);
  Int modulus = (sym.h / g) * *e;
  Int m = n_chi / exact_part(n_chi, c.y);
  auto u = solve_linear_congruence(c.y / g, -m * z_entry, modulus);
  if (!u) throw std::logic_error("solve_ug: congruence unexpectedly unsolvable");
  return {*u, modulus};
}

struct CuspTransform {
  Cusp c;
  GroupSymbol sym;
  Int e_g;
  Int u_residue;      // least non-negative
  Int u_modulus;      // e_g * h / gcd(h, y)
  Rat scale;          // gcd(h,y)^2 / (e_g h^2)
  Rat shift_modulus;  // quantum of the shift as u moves in its class (= 1/h)
  Mat2 pc;            // the P_c used
  Mat2 w;             // P_c * U^-1, a W_{e_g} member of the eigen group

  // shift -u*gcd(h,y)/(e_g h^2) for a chosen representative u.
  Rat shift_for(const Int& u) const {
    Rat s = Rat(-u * gcd_z(sym.h, c.inf ? sym.h : c.y)) / Rat(e_g * sym.h * sym.h);
    s.canonicalize();
    return s;
  }
};

// t_g | P_c = sigma_g t_g(scale * z + shift): assemble the transform data and
// verify P_c * U^-1 really lands in the eigen group with the predicted e_g.
inline CuspTransform build_transform(const GroupSymbol& sym, const Cusp& c,
                                     const Int& n_chi) {
  auto e = cusp_equiv_infinity(c, sym);
  if (!e) throw std::domain_error("build_transform: cusp not equivalent to infinity");
  CuspTransform tr;
  tr.c = c;
  tr.sym = sym;
  tr.e_g = *e;
  if (c.inf) {
    tr.u_residue = 0;
    tr.u_modulus = 1;
    tr.scale = 1;
    tr.shift_modulus = Rat(1, sym.h);
    tr.pc = Mat2::identity();
    tr.w = Mat2::identity();
    return tr;
  }
  tr.pc = build_pc(c, n_chi);
  Int z = pc_z_entry(tr.pc, c, n_chi);
  auto [u, mod] = solve_ug(sym, c, z, n_chi);
  tr.u_residue = u;
  tr.u_modulus = mod;
  Int g = gcd_z(sym.h, c.y);
  tr.scale = Rat(g * g) / Rat(tr.e_g * sym.h * sym.h);
  tr.scale.canonicalize();
  tr.shift_modulus = Rat(1, sym.h);
  // U^-1 = (e h/g, u/h; 0, g/h); P_c U^-1 must be a W_{e_g} of the eigen group.
  Mat2 u_inv(Rat(tr.e_g * sym.h / g), Rat(u) / Rat(sym.h), Rat(0), Rat(g) / Rat(sym.h));
  tr.w = tr.pc * u_inv;
  auto got = eigen_member(tr.w, sym);
  if (!got || *got != tr.e_g)
    throw std::logic_error("build_transform: P_c U^-1 membership verification failed");
  return tr;
}

// q-exponent of the pole of t_g | P_c: gcd(h,y)^2 / (e_g h^2), in (0, 1].
inline Rat pole_exponent(const GroupSymbol& sym, const Cusp& c) {
  auto e = cusp_equiv_infinity(c, sym);
  if (!e) throw std::domain_error("pole_exponent: cusp not equivalent to infinity");
  if (c.inf) return Rat(1);
  Int g = gcd_z(sym.h, c.y);
  Rat a = Rat(g * g) / Rat(*e * sym.h * sym.h);
  a.canonicalize();
  return a;
}

}  // namespace ms
