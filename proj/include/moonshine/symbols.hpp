// Conway-style group symbols n|h+e,f,... : parsing, eigen-group membership,
// the orbit of infinity, and cusp-to-infinity equivalence.
#pragma once

#include <optional>
#include <set>
#include <string>

#include "moonshine/atkin_lehner.hpp"

namespace ms {

struct GroupSymbol {
  Int n = 1;
  Int h = 1;
  bool all_exact = false;     // bare "+": every exact divisor of n/h
  std::set<Int> harmonics;    // expanded list, 1 excluded (implicit)

  Int level() const { return n / h; }  // N = n/h, the Gamma0 level inside
  bool operator==(const GroupSymbol& o) const {
    return n == o.n && h == o.h && all_exact == o.all_exact && harmonics == o.harmonics;
  }
};

inline std::set<Int> exact_divisors(const Int& n) {
  std::set<Int> out;
  for (const Int& d : divisors(n))
    if (gcd_z(d, n / d) == 1) out.insert(d);
  return out;
}

// Grammar: INT ( "|" INT )? ( "+" ( INT ("," INT)* )? )?
inline GroupSymbol parse_symbol(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::domain_error("parse_symbol: empty symbol");
  if (t.find('-') != std::string::npos)
    throw std::domain_error("parse_symbol: minus variants not supported");
  GroupSymbol sym;
  size_t pos = 0;
  auto read_int = [&]() -> Int {
    size_t start = pos;
    while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == start) throw std::domain_error("parse_symbol: expected integer in '" + text + "'");
    return Int(t.substr(start, pos - start));
  };
  sym.n = read_int();
  if (sym.n < 1) throw std::domain_error("parse_symbol: n must be positive");
  if (pos < t.size() && t[pos] == '|') {
    ++pos;
    sym.h = read_int();
  }
  if (sym.h < 1 || sym.n % sym.h != 0)
    throw std::domain_error("parse_symbol: h must divide n in '" + text + "'");
  if (pos < t.size()) {
    if (t[pos] != '+')
      throw std::domain_error("parse_symbol: unexpected character in '" + text + "'");
    ++pos;
    if (pos == t.size()) {
      sym.all_exact = true;
      for (const Int& e : exact_divisors(sym.level()))
        if (e != 1) sym.harmonics.insert(e);
    } else {
      while (true) {
        Int e = read_int();
        if (!exactly_divides(e, sym.level()))
          throw std::domain_error("parse_symbol: harmonic " + e.get_str() +
                                  " is not an exact divisor of n/h in '" + text + "'");
        if (e != 1) sym.harmonics.insert(e);  // 1 is implicit
        if (pos == t.size()) break;
        if (t[pos] != ',')
          throw std::domain_error("parse_symbol: unexpected character in '" + text + "'");
        ++pos;
      }
    }
  }
  return sym;
}

inline std::string print_symbol(const GroupSymbol& sym) {
  std::string out = sym.n.get_str();
  if (sym.h != 1) out += "|" + sym.h.get_str();
  if (sym.all_exact) {
    out += "+";
  } else if (!sym.harmonics.empty()) {
    out += "+";
    bool first = true;
    for (const Int& e : sym.harmonics) {
      if (!first) out += ",";
      out += e.get_str();
      first = false;
    }
  }
  return out;
}

// Membership in the eigen group diag(1/h,1) <Gamma0(n/h), W_e,...> diag(h,1):
// conjugate back by diag(h,1) and test the h = 1 building block.
inline std::optional<Int> eigen_member(const Mat2& m, const GroupSymbol& sym) {
  Mat2 conj(m.a, m.b * Rat(sym.h), m.c / Rat(sym.h), m.d);
  return extended_member(conj, sym.level(), sym.harmonics);
}

// Cusp-to-infinity equivalence in the eigen group: with N = n/h and
// g0 = gcd(N, y/gcd(y,h)), the cusp is equivalent to infinity iff g0 = N
// (e = 1) or e = N/g0 is one of the listed harmonics.
inline std::optional<Int> cusp_equiv_infinity(const Cusp& c, const GroupSymbol& sym) {
  if (c.inf) return Int(1);
  Int n0 = sym.level();
  Int g0 = gcd_z(n0, c.y / gcd_z(c.y, sym.h));
  if (g0 == n0) return Int(1);
  Int e = n0 / g0;
  if (sym.harmonics.count(e)) return e;
  return std::nullopt;
}

// Admissible values of gcd(y/gcd(y,h), N) on the orbit of infinity: N/e over
// the harmonics (with e = 1 included).
inline std::set<Int> orbit_denominators(const GroupSymbol& sym) {
  std::set<Int> out{sym.level()};
  for (const Int& e : sym.harmonics) out.insert(sym.level() / e);
  return out;
}

}  // namespace ms
