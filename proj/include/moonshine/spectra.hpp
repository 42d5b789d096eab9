// Singular-part spectra sing_{P_c} t_chi, the spectrum-level substitution
// test, and the invariance-group pipeline (cusp-map exclusion and
// translation-stabilizer exclusion).
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "moonshine/monster.hpp"
#include "moonshine/oracle.hpp"

namespace ms {

// Classes g whose eigen group makes c equivalent to infinity.
inline std::set<std::string> phi_c(const Cusp& c, const std::vector<MonsterClassRecord>& classes) {
  std::set<std::string> out;
  for (const auto& rec : classes)
    if (cusp_equiv_infinity(c, rec.sym)) out.insert(rec.class_id);
  return out;
}

struct SpectrumTerm {
  std::string class_id;
  Rat exponent;          // pole term ~ q^{-exponent}
  Int ambiguity_order;   // h_g: sigma_g is an h_g-th root of unity
  bool char_nonzero;     // chi(g) != 0 per the zero-pattern data
  std::optional<Rat> weight_hint;
};

struct SingularSpectrum {
  int k = 0;
  Cusp c;
  std::vector<SpectrumTerm> terms;  // sorted by exponent, descending
};

inline SingularSpectrum singular_spectrum(int k, const Cusp& c, const MoonshineData& data) {
  SingularSpectrum s;
  s.k = k;
  s.c = c;
  for (const auto& rec : data.classes) {
    if (!cusp_equiv_infinity(c, rec.sym)) continue;
    SpectrumTerm t;
    t.class_id = rec.class_id;
    t.exponent = pole_exponent(rec.sym, c);
    t.ambiguity_order = rec.sym.h;
    t.char_nonzero = data.char_nonzero(k, rec.class_id);
    s.terms.push_back(std::move(t));
  }
  std::stable_sort(s.terms.begin(), s.terms.end(),
                   [](const SpectrumTerm& a, const SpectrumTerm& b) { return a.exponent > b.exponent; });
  return s;
}

// Exponents whose aggregate coefficient is provably nonzero.  Conservative:
// either a single chi-nonzero class with h = 1 carries the exponent alone
// (sigma = 1, coefficient = weight * chi(g) != 0), or -- for the trivial
// character -- every chi-nonzero class at the exponent has h = 1, so the
// aggregate is a sum of positive class weights.
inline std::set<Rat> definite_exponents(const SingularSpectrum& s, bool trivial_character) {
  std::map<Rat, std::vector<const SpectrumTerm*>> groups;
  for (const auto& t : s.terms)
    if (t.char_nonzero) groups[t.exponent].push_back(&t);
  std::set<Rat> out;
  for (auto& [exp, terms] : groups) {
    bool all_h1 = true;
    for (auto* t : terms)
      if (t->ambiguity_order != 1) all_h1 = false;
    if ((terms.size() == 1 && all_h1) || (trivial_character && all_h1)) out.insert(exp);
  }
  return out;
}

inline bool is_2357_smooth(Int n) {
  n = abs(n);
  if (n == 0) return false;
  for (int p : {2, 3, 5, 7})
    while (n % p == 0) n /= p;
  return n == 1;
}

// Candidate scale factors a > 0 such that src's exponents scaled by a could
// yield dst's exponents under z -> az + b.  Conservative: a survives unless
// some provably-present dst exponent x has no chi-nonzero src term at x/a.
// Candidates are exponent ratios, screened to {2,3,5,7}-smooth rationals
// below a height cap (the Helling-bound consequence restricts a to such
// rationals).  The shift b is never solved for: exponent mismatch already
// falsifies existence for every b.
inline std::set<Rat> match_under_affine(const SingularSpectrum& src, const SingularSpectrum& dst,
                                        bool trivial_character, const Int& height_cap = 10000) {
  std::set<Rat> src_exps_nonzero;
  for (const auto& t : src.terms)
    if (t.char_nonzero) src_exps_nonzero.insert(t.exponent);
  std::set<Rat> candidates;
  for (const auto& td : dst.terms)
    for (const auto& ts : src.terms) {
      Rat a = td.exponent / ts.exponent;
      a.canonicalize();
      if (!is_2357_smooth(a.get_num()) || !is_2357_smooth(a.get_den())) continue;
      if (a.get_num() > height_cap || a.get_den() > height_cap) continue;
      candidates.insert(a);
    }
  std::set<Rat> definite = definite_exponents(dst, trivial_character);
  std::set<Rat> out;
  for (const Rat& a : candidates) {
    bool ok = true;
    for (const Rat& x : definite) {
      Rat need = x / a;
      need.canonicalize();
      if (!src_exps_nonzero.count(need)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(a);
  }
  return out;
}

enum class Verdict { ProvedNoMap, MapCandidate, Inconclusive, ProvedExcluded };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ProvedNoMap: return "ProvedNoMap";
    case Verdict::MapCandidate: return "MapCandidate";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::ProvedExcluded: return "ProvedExcluded";
  }
  return "?";
}

struct CuspVerdict {
  CuspClass cls;
  Verdict verdict = Verdict::Inconclusive;
  std::set<Rat> candidates;  // surviving scale factors when not excluded
  std::string detail;
};

// Can some A_c in the invariance group map 0 to (the class of) c?  Compares
// sing at c against sing at 0 at spectrum level.
inline CuspVerdict verdict_for_cusp_class(int k, const CuspClass& cls,
                                          const SingularSpectrum& spec0,
                                          const MoonshineData& data, const Int& height_cap = 10000) {
  CuspVerdict v;
  v.cls = cls;
  Cusp c = cls.representative();
  SingularSpectrum spec_c = singular_spectrum(k, c, data);
  bool trivial = is_trivial_character(k, data);
  auto survivors = match_under_affine(spec_c, spec0, trivial, height_cap);
  if (survivors.empty()) {
    v.verdict = Verdict::ProvedNoMap;
    v.detail = "no {2,3,5,7}-smooth scale maps the spectrum at " + cusp_to_string(c) +
               " onto the provably-present exponents at 0";
  } else if (definite_exponents(spec0, trivial).empty()) {
    v.verdict = Verdict::Inconclusive;
    v.detail = "no provably-nonzero exponent at 0 to test against (character values needed)";
  } else {
    v.verdict = Verdict::MapCandidate;
    v.candidates = survivors;
    std::string list;
    for (const Rat& a : survivors) list += (list.empty() ? "" : ",") + rat_to_string(a);
    v.detail = "surviving scale candidates a in {" + list +
               "}; coefficient-level cancellation not analyzed (character values needed)";
  }
  return v;
}

struct TranslationVerdict {
  Int r;
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;
};

// Could the stabilizer of 0 in the invariance group exceed that of
// Gamma0(N_chi)?  The only candidates are B_r = (1, 0; N_chi/r, 1) for prime
// r | N_chi with r in {2,3,5,7} (Helling bound).  B_r moves infinity to the
// cusp c_r = 1/(N_chi/r), so B_r in the group forces sing at infinity to be
// derivable from sing at c_r under z -> az + b; comparing the two spectra
// excludes it.
inline TranslationVerdict verdict_for_translation(int k, const Int& r, const MoonshineData& data) {
  TranslationVerdict tv;
  tv.r = r;
  Int n = n_chi(k, data);
  if (n % r != 0) {
    tv.verdict = Verdict::ProvedExcluded;
    tv.detail = "vacuous: r does not divide N_chi, the candidate element already lies in Gamma0(N_chi)";
    return tv;
  }
  // Gate: some chi-nonzero class must have n_g h_g not dividing N_chi / r,
  // otherwise the element genuinely fixes every contributing series.
  bool gate = false;
  for (const auto& rec : data.classes)
    if (data.char_nonzero(k, rec.class_id) && (n / r) % (rec.sym.n * rec.sym.h) != 0) gate = true;
  if (!gate) {
    tv.verdict = Verdict::Inconclusive;
    tv.detail = "every contributing n_g h_g divides N_chi/r; the element fixes t_chi, no exclusion possible";
    return tv;
  }
  Cusp cr(1, n / r);
  SingularSpectrum spec = singular_spectrum(k, cr, data);
  if (is_trivial_character(k, data)) {
    // sing at infinity is exactly q^{-1} with coefficient = total class mass
    // (all values 1).  Under any z -> az + b only the classes sitting at one
    // exponent of the spectrum at c_r can feed that coefficient; by the
    // triangle inequality it falls strictly short as soon as some class is
    // missing from Phi_{c_r} or sits at a different exponent.
    for (const auto& rec : data.classes) {
      if (!data.char_nonzero(k, rec.class_id)) continue;
      if (!cusp_equiv_infinity(cr, rec.sym)) {
        tv.verdict = Verdict::ProvedExcluded;
        tv.detail = "class " + rec.class_id + " contributes at infinity but not at " +
                    cusp_to_string(cr) + "; the q^-1 mass cannot be reproduced there";
        return tv;
      }
    }
    std::set<Rat> exps;
    std::string witness_hi, witness_lo;
    Rat first_exp;
    for (const auto& t : spec.terms)
      if (t.char_nonzero) {
        if (exps.empty()) {
          witness_hi = t.class_id;
          first_exp = t.exponent;
        } else if (witness_lo.empty() && t.exponent != first_exp) {
          witness_lo = t.class_id;
        }
        exps.insert(t.exponent);
      }
    if (exps.size() >= 2) {
      tv.verdict = Verdict::ProvedExcluded;
      tv.detail = "spectrum at " + cusp_to_string(cr) +
                  " spreads the contributing classes over distinct exponents (e.g. " + witness_hi +
                  " vs " + witness_lo + "); no single scale collects the full q^-1 mass";
      return tv;
    }
    tv.verdict = Verdict::Inconclusive;
    tv.detail = "all contributing classes share one exponent at " + cusp_to_string(cr);
    return tv;
  }
  // Non-trivial character: sing at infinity vanishes exactly (column
  // orthogonality), so any provably-nonzero term at c_r is a contradiction.
  for (const Rat& x : definite_exponents(spec, false)) {
    // spec rule: the witness class must also fail n_g h_g | N_chi/r
    for (const auto& t : spec.terms) {
      if (t.exponent != x || !t.char_nonzero) continue;
      const auto& sym = data.cls(t.class_id).sym;
      if ((n / r) % (sym.n * sym.h) != 0) {
        tv.verdict = Verdict::ProvedExcluded;
        tv.detail = "sing at infinity vanishes (orthogonality) but class " + t.class_id +
                    " carries exponent " + rat_to_string(x) + " alone at " + cusp_to_string(cr);
        return tv;
      }
    }
  }
  tv.verdict = Verdict::Inconclusive;
  tv.detail = "no single-class h=1 witness exponent at " + cusp_to_string(cr) +
              " (character values needed)";
  return tv;
}

inline std::map<std::string, TranslationVerdict> prove_translation_stabilizer(
    int k, const MoonshineData& data) {
  std::map<std::string, TranslationVerdict> out;
  for (int r : {2, 3, 5, 7}) out[std::to_string(r)] = verdict_for_translation(k, r, data);
  return out;
}

struct InvarianceOptions {
  std::optional<long> cusp_limit;       // max number of cusp classes examined
  bool big_prime_denominators = false;  // only denominators with a prime factor >= 11
  Int height_cap = 10000;
};

struct InvarianceReport {
  int k = 0;
  Int n;  // N_chi
  std::vector<CuspVerdict> cusp_verdicts;
  std::vector<TranslationVerdict> translation_verdicts;
  bool truncated = false;  // enumeration stopped at cusp_limit or filtered
  std::string conclusion;  // "ProvedEqualGamma0" or "Inconclusive(...)"
};

// Divisors from the factorization (levels here are {2..71}-smooth, so trial
// division in gamma0::divisors would crawl on 22-digit values).
inline std::vector<Int> divisors_from_factorization(const Int& n) {
  std::vector<Int> out{1};
  for (auto& [p, e] : factorize(n)) {
    size_t base = out.size();
    Int pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline InvarianceReport invariance_group(int k, const MoonshineData& data,
                                         const InvarianceOptions& opts = {}) {
  InvarianceReport rep;
  rep.k = k;
  rep.n = n_chi(k, data);
  SingularSpectrum spec0 = singular_spectrum(k, Cusp(0, 1), data);
  long examined = 0;
  bool limit_hit = false;
  for (const Int& d : divisors_from_factorization(rep.n)) {
    if (d == 1) continue;  // the class of the cusp 0 itself is skipped
    if (opts.big_prime_denominators) {
      bool big = false;
      for (auto& [p, e] : factorize(d))
        if (p >= 11) big = true;
      if (!big) {
        rep.truncated = true;  // classes were skipped by the filter
        continue;
      }
    }
    Int g = gcd_z(d, rep.n / d);
    for (Int r = 0; r < g && !limit_hit; ++r) {
      if (g > 1 && gcd_z(r, g) != 1) continue;
      if (opts.cusp_limit && examined >= *opts.cusp_limit) {
        limit_hit = true;
        rep.truncated = true;
        break;
      }
      rep.cusp_verdicts.push_back(
          verdict_for_cusp_class(k, CuspClass{rep.n, d, r}, spec0, data, opts.height_cap));
      ++examined;
    }
    if (limit_hit) break;
  }
  auto tv = prove_translation_stabilizer(k, data);
  for (auto& [r, v] : tv) rep.translation_verdicts.push_back(v);
  bool all_nomap = !rep.truncated;
  for (const auto& v : rep.cusp_verdicts)
    if (v.verdict != Verdict::ProvedNoMap) all_nomap = false;
  bool all_excluded = true;
  for (const auto& v : rep.translation_verdicts)
    if (v.verdict != Verdict::ProvedExcluded) all_excluded = false;
  if (all_nomap && all_excluded) {
    rep.conclusion = "ProvedEqualGamma0";
  } else {
    std::string why;
    if (rep.truncated) why += "enumeration truncated";
    for (const auto& v : rep.cusp_verdicts)
      if (v.verdict != Verdict::ProvedNoMap)
        why += (why.empty() ? "" : "; ") + std::string("cusp ") +
               cusp_to_string(v.cls.representative()) + " " + verdict_name(v.verdict);
    for (const auto& v : rep.translation_verdicts)
      if (v.verdict != Verdict::ProvedExcluded)
        why += (why.empty() ? "" : "; ") + std::string("r=") + v.r.get_str() + " " +
               verdict_name(v.verdict);
    rep.conclusion = "Inconclusive(" + why + ")";
  }
  return rep;
}

}  // namespace ms
