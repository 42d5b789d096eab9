// Monster class/character data ingestion, N_chi, Table 1 verification,
// distinct-series count, head decompositions.
#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "moonshine/transforms.hpp"

namespace ms {

struct MonsterClassRecord {
  std::string class_id;
  GroupSymbol sym;
  std::optional<Int> centralizer_order;
};

struct CharacterRecord {
  int k = 0;
  Int degree;
  int conjugate_k = 0;
  std::set<std::string> zero_classes;
};

struct MoonshineData {
  std::vector<MonsterClassRecord> classes;
  std::map<std::string, size_t> class_index;
  std::vector<CharacterRecord> characters;  // position = k - 1
  std::vector<std::string> warnings;

  const MonsterClassRecord& cls(const std::string& id) const {
    auto it = class_index.find(id);
    if (it == class_index.end()) throw std::domain_error("unknown class " + id);
    return classes[it->second];
  }
  const CharacterRecord& chr(int k) const {
    if (k < 1 || k > static_cast<int>(characters.size()))
      throw std::domain_error("character index out of range: " + std::to_string(k));
    return characters[k - 1];
  }
  bool char_nonzero(int k, const std::string& class_id) const {
    return chr(k).zero_classes.find(class_id) == chr(k).zero_classes.end();
  }
};

namespace detail {

// Reads a TSV file, skipping '#' comments and blank lines; calls fn with
// (line_number, fields).  Parse failures should throw std::domain_error;
// the line number is prefixed here.
template <class Fn>
void for_each_tsv_row(const std::string& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
      if (ch == '\t') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    fields.push_back(cur);
    try {
      fn(lineno, fields);
    } catch (const std::domain_error& e) {
      throw std::domain_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

}  // namespace detail

inline std::vector<MonsterClassRecord> load_classes(const std::string& path,
                                                    std::vector<std::string>* warnings = nullptr) {
  std::vector<MonsterClassRecord> out;
  std::set<std::string> seen;
  detail::for_each_tsv_row(path, [&](int, const std::vector<std::string>& f) {
    if (f.size() < 2 || f.size() > 3)
      throw std::domain_error("expected class_id<TAB>symbol[<TAB>centralizer]");
    MonsterClassRecord rec;
    rec.class_id = f[0];
    if (!seen.insert(rec.class_id).second)
      throw std::domain_error("duplicate class id " + rec.class_id);
    rec.sym = parse_symbol(f[1]);
    if (f.size() == 3) rec.centralizer_order = Int(f[2]);
    out.push_back(std::move(rec));
  });
  if (out.size() != 194 && warnings)
    warnings->push_back("classes: expected 194 records, got " + std::to_string(out.size()));
  return out;
}

inline std::vector<CharacterRecord> load_characters(const std::string& path,
                                                    std::vector<std::string>* warnings = nullptr) {
  std::vector<CharacterRecord> out;
  std::set<int> seen;
  detail::for_each_tsv_row(path, [&](int, const std::vector<std::string>& f) {
    if (f.size() != 4)
      throw std::domain_error("expected k<TAB>degree<TAB>conjugate_k<TAB>zero-list");
    CharacterRecord rec;
    rec.k = std::stoi(f[0]);
    if (!seen.insert(rec.k).second)
      throw std::domain_error("duplicate character index " + f[0]);
    rec.degree = Int(f[1]);
    if (rec.degree < 1) throw std::domain_error("degree must be positive");
    rec.conjugate_k = std::stoi(f[2]);
    if (f[3] != "-") {
      std::stringstream ss(f[3]);
      std::string id;
      while (std::getline(ss, id, ',')) rec.zero_classes.insert(id);
    }
    out.push_back(std::move(rec));
  });
  if (out.size() != 194 && warnings)
    warnings->push_back("characters: expected 194 records, got " + std::to_string(out.size()));
  for (size_t i = 0; i < out.size(); ++i)
    if (out[i].k != static_cast<int>(i) + 1)
      throw std::domain_error(path + ": character indices must be 1..n in order");
  for (const auto& rec : out) {
    if (rec.conjugate_k < 1 || rec.conjugate_k > static_cast<int>(out.size()) ||
        out[rec.conjugate_k - 1].conjugate_k != rec.k)
      throw std::domain_error(path + ": conjugate pairing is not an involution at k=" +
                              std::to_string(rec.k));
    if (out[rec.conjugate_k - 1].zero_classes != rec.zero_classes)
      throw std::domain_error(path + ": conjugate partners disagree on zero classes at k=" +
                              std::to_string(rec.k));
  }
  return out;
}

inline MoonshineData load_data(const std::string& dir) {
  MoonshineData d;
  d.classes = load_classes(dir + "/classes.tsv", &d.warnings);
  for (size_t i = 0; i < d.classes.size(); ++i) d.class_index[d.classes[i].class_id] = i;
  d.characters = load_characters(dir + "/characters.tsv", &d.warnings);
  for (const auto& chr : d.characters)
    for (const auto& id : chr.zero_classes)
      if (!d.class_index.count(id))
        throw std::domain_error("characters.tsv: unknown class id " + id);
  return d;
}

// N_chi = lcm{ n_g h_g : chi_k(g) != 0 }.
inline Int n_chi(int k, const MoonshineData& data) {
  const auto& zeros = data.chr(k).zero_classes;
  Int l = 1;
  for (const auto& rec : data.classes)
    if (!zeros.count(rec.class_id)) l = lcm_z(l, rec.sym.n * rec.sym.h);
  return l;
}

// Is chi_k the trivial character?  Degree 1 plus an empty zero pattern pins
// it down (the monster is simple, so the only linear character is trivial,
// and only the trivial row has no zeros).
inline bool is_trivial_character(int k, const MoonshineData& data) {
  return data.chr(k).degree == 1 && data.chr(k).zero_classes.empty();
}

// 194 minus the number of conjugate pairs.
inline int distinct_series_count(const MoonshineData& data) {
  int pairs = 0;
  for (const auto& rec : data.characters)
    if (rec.conjugate_k > rec.k) ++pairs;
  return static_cast<int>(data.characters.size()) - pairs;
}

// ---- Table 1 ----

struct Table1Row {
  int k = 0;
  Int fixture_n;            // value implied by the factorization
  std::string factorization;
  Int factorization_product;
  std::optional<Int> printed;  // source integer when it disagrees
  bool internal_ok = false;    // factorization multiplies to fixture_n
  bool matches_data = false;   // n_chi(k) == fixture_n
  bool flagged = false;        // printed value disagrees with factorization
};

struct Table1Report {
  std::vector<Table1Row> rows;
  bool all_match = false;
  std::vector<int> flagged_rows;
};

inline Int parse_factorization(const std::string& s) {
  Int prod = 1;
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '*')) {
    auto caret = term.find('^');
    Int p(caret == std::string::npos ? term : term.substr(0, caret));
    unsigned long e = caret == std::string::npos ? 1 : std::stoul(term.substr(caret + 1));
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    prod *= pe;
  }
  return prod;
}

inline Table1Report verify_table1(const MoonshineData& data, const std::string& fixture_path) {
  Table1Report rep;
  detail::for_each_tsv_row(fixture_path, [&](int, const std::vector<std::string>& f) {
    if (f.size() < 3 || f.size() > 4)
      throw std::domain_error("expected k<TAB>N<TAB>factorization[<TAB>printed=...]");
    Table1Row row;
    row.k = std::stoi(f[0]);
    row.fixture_n = Int(f[1]);
    row.factorization = f[2];
    row.factorization_product = parse_factorization(f[2]);
    if (f.size() == 4) {
      if (f[3].rfind("printed=", 0) != 0) throw std::domain_error("bad annotation " + f[3]);
      row.printed = Int(f[3].substr(8));
      row.flagged = *row.printed != row.factorization_product;
    }
    row.internal_ok = row.factorization_product == row.fixture_n;
    row.matches_data = n_chi(row.k, data) == row.fixture_n;
    if (row.flagged) rep.flagged_rows.push_back(row.k);
    rep.rows.push_back(std::move(row));
  });
  rep.all_match = rep.rows.size() == 194;
  for (const auto& r : rep.rows)
    if (!r.internal_ok || !r.matches_data) rep.all_match = false;
  return rep;
}

// ---- head decompositions ----

struct HeadsRow {
  Int h;
  Int dimension;
  std::map<int, Int> decomposition;  // k -> multiplicity
  Int degree_sum;
  bool ok = false;
};

struct HeadsReport {
  std::vector<HeadsRow> rows;
  std::map<Int, Int> ch1;  // h -> c_{h1}
  bool ch1_consistent = false;
  bool all_ok = false;
};

inline HeadsReport verify_heads(const MoonshineData& data, const std::string& heads_path,
                                const std::string& ch1_path) {
  HeadsReport rep;
  detail::for_each_tsv_row(heads_path, [&](int, const std::vector<std::string>& f) {
    if (f.size() != 3) throw std::domain_error("expected h<TAB>dim<TAB>decomposition");
    HeadsRow row;
    row.h = Int(f[0]);
    row.dimension = Int(f[1]);
    std::stringstream ss(f[2]);
    std::string term;
    while (std::getline(ss, term, ',')) {
      auto colon = term.find(':');
      if (colon == std::string::npos) throw std::domain_error("bad decomposition term " + term);
      row.decomposition[std::stoi(term.substr(0, colon))] = Int(term.substr(colon + 1));
    }
    row.degree_sum = 0;
    for (auto& [k, mult] : row.decomposition) row.degree_sum += mult * data.chr(k).degree;
    row.ok = row.degree_sum == row.dimension;
    rep.rows.push_back(std::move(row));
  });
  detail::for_each_tsv_row(ch1_path, [&](int, const std::vector<std::string>& f) {
    if (f.size() != 2) throw std::domain_error("expected h<TAB>c_h1");
    rep.ch1[Int(f[0])] = Int(f[1]);
  });
  rep.ch1_consistent = true;
  for (const auto& row : rep.rows) {
    auto it = rep.ch1.find(row.h);
    if (it == rep.ch1.end()) continue;
    auto d1 = row.decomposition.find(1);
    Int c1 = d1 == row.decomposition.end() ? Int(0) : d1->second;
    if (c1 != it->second) rep.ch1_consistent = false;
  }
  rep.all_ok = rep.ch1_consistent && !rep.rows.empty();
  for (const auto& row : rep.rows)
    if (!row.ok) rep.all_ok = false;
  return rep;
}

}  // namespace ms
