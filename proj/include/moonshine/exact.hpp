// Exact rational scalars, 2x2 matrices, Moebius action on cusps, and the
// coprimality-constrained extended gcd.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ms {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd_z(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm_z(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Least non-negative residue of a mod m (m > 0).
inline Int mod_z(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Inverse of a mod m (m >= 1); throws if not invertible.
inline Int inv_mod(const Int& a, const Int& m) {
  if (m == 1) return 0;
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw std::domain_error("inv_mod: not invertible");
  return r;
}

// True when e | n and gcd(e, n/e) = 1.
inline bool exactly_divides(const Int& e, const Int& n) {
  if (e <= 0 || n <= 0 || n % e != 0) return false;
  return gcd_z(e, n / e) == 1;
}

// Removes from r every prime it shares with s; returns the removed part.
// Works by repeated gcd extraction, no factoring needed.
inline Int split_off(Int& r, const Int& s) {
  Int part = 1;
  Int g = gcd_z(r, s);
  while (g > 1) {
    r /= g;
    part *= g;
    g = gcd_z(r, g);
  }
  return part;
}

// Extended gcd with a coprimality constraint: given gcd(a,b) = 1 and m != 0,
// returns (x, y) with ax + by = 1 and gcd(x*m, y) = 1.  Deterministic: base
// Bezout pair shifted by the part of m coprime to both a and the base y.
inline std::pair<Int, Int> ext_gcd_coprime(const Int& a, const Int& b, const Int& m) {
  if (m == 0) throw std::domain_error("ext_gcd_coprime: m = 0");
  Int g, x0, y0;
  mpz_gcdext(g.get_mpz_t(), x0.get_mpz_t(), y0.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) throw std::domain_error("ext_gcd_coprime: gcd(a,b) != 1");
  if (b == 0) return {x0, y0};  // a = +-1; base pair (1/a, 0)
  Int r = abs(m);
  split_off(r, a);   // primes shared with a
  split_off(r, y0);  // primes shared with the base y
  // r is now the part of m coprime to both; shift the Bezout pair by it.
  return {x0 - b * r, y0 + a * r};
}

// A cusp: either infinity or a reduced fraction x/y with y >= 1.
struct Cusp {
  bool inf = false;
  Int x = 0;
  Int y = 1;

  Cusp() = default;
  Cusp(Int nx, Int ny) {
    if (ny == 0) {
      inf = true;
      x = 1;
      y = 0;
      return;
    }
    if (ny < 0) {
      nx = -nx;
      ny = -ny;
    }
    Int g = gcd_z(abs(nx), ny);
    if (g > 1) {
      nx /= g;
      ny /= g;
    }
    x = nx;
    y = ny;
  }
  static Cusp infinity() {
    Cusp c;
    c.inf = true;
    c.x = 1;
    c.y = 0;
    return c;
  }
  bool operator==(const Cusp& o) const {
    if (inf || o.inf) return inf == o.inf;
    return x == o.x && y == o.y;
  }
  bool operator!=(const Cusp& o) const { return !(*this == o); }
};

// 2x2 rational matrix; group elements live in GL2+ so det > 0 is expected
// (not enforced on construction: intermediate values may be anything).
struct Mat2 {
  Rat a, b, c, d;

  Mat2() : a(1), b(0), c(0), d(1) {}
  Mat2(Rat aa, Rat bb, Rat cc, Rat dd)
      : a(std::move(aa)), b(std::move(bb)), c(std::move(cc)), d(std::move(dd)) {
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    d.canonicalize();
  }
  static Mat2 identity() { return Mat2(); }

  Rat det() const { return a * d - b * c; }

  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }

  bool is_integral() const {
    return a.get_den() == 1 && b.get_den() == 1 && c.get_den() == 1 && d.get_den() == 1;
  }

  Mat2 inverse() const {
    Rat dt = det();
    if (dt == 0) throw std::domain_error("Mat2::inverse: singular");
    return Mat2(d / dt, -b / dt, -c / dt, a / dt);
  }
};

inline Mat2 mat_mul(const Mat2& m1, const Mat2& m2) {
  return Mat2(m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
              m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d);
}

inline Mat2 operator*(const Mat2& m1, const Mat2& m2) { return mat_mul(m1, m2); }

// Moebius action on P1(Q).
inline Cusp mat_act(const Mat2& m, const Cusp& c) {
  Rat nx, ny;
  if (c.inf) {
    nx = m.a;
    ny = m.c;
  } else {
    nx = m.a * Rat(c.x) + m.b * Rat(c.y);
    ny = m.c * Rat(c.x) + m.d * Rat(c.y);
  }
  // (nx : ny) projectively; clear denominators.
  Int num = nx.get_num() * ny.get_den();
  Int den = ny.get_num() * nx.get_den();
  if (num == 0 && den == 0) throw std::domain_error("mat_act: singular image");
  return Cusp(num, den);
}

// Scale a rational matrix by the positive factor that makes it a primitive
// integer matrix (integer entries with content 1).  Returns nullopt for the
// zero matrix.
inline std::optional<Mat2> primitive_integer_form(const Mat2& m) {
  Int l = m.a.get_den();
  l = lcm_z(l, m.b.get_den());
  l = lcm_z(l, m.c.get_den());
  l = lcm_z(l, m.d.get_den());
  Int ia = m.a.get_num() * (l / m.a.get_den());
  Int ib = m.b.get_num() * (l / m.b.get_den());
  Int ic = m.c.get_num() * (l / m.c.get_den());
  Int id = m.d.get_num() * (l / m.d.get_den());
  Int g = gcd_z(gcd_z(abs(ia), abs(ib)), gcd_z(abs(ic), abs(id)));
  if (g == 0) return std::nullopt;
  return Mat2(Rat(ia / g), Rat(ib / g), Rat(ic / g), Rat(id / g));
}

// ---- parsing / printing ----

inline std::string cusp_to_string(const Cusp& c) {
  if (c.inf) return "inf";
  if (c.y == 1) return c.x.get_str();
  return c.x.get_str() + "/" + c.y.get_str();
}

inline Cusp parse_cusp(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t == "inf" || t == "oo" || t == "infinity") return Cusp::infinity();
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Cusp(Int(t), 1);
    return Cusp(Int(t.substr(0, slash)), Int(t.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::domain_error("parse_cusp: bad cusp '" + s + "'");
  }
}

inline std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    Rat r = slash == std::string::npos
                ? Rat(Int(s))
                : Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::domain_error("parse_rat: bad rational '" + s + "'");
  }
}

inline std::string mat_to_string(const Mat2& m) {
  return "[[" + rat_to_string(m.a) + "," + rat_to_string(m.b) + "],[" +
         rat_to_string(m.c) + "," + rat_to_string(m.d) + "]]";
}

inline Mat2 parse_mat(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  // expected shape: [[a,b],[c,d]]
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : t) {
    if (ch == '[' || ch == ']') continue;
    if (ch == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  if (parts.size() != 4) throw std::domain_error("parse_mat: expected 4 entries in '" + s + "'");
  return Mat2(parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2]),
              parse_rat(parts[3]));
}

}  // namespace ms
