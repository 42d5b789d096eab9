// Command-line entry point.  Exit codes: 0 success, 1 domain error, 2 usage.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "moonshine/report_json.hpp"

using namespace ms;

namespace {

std::string resolve_data_dir(const std::string& cli_value) {
  if (const char* env = std::getenv("MOONSHINE_DATA")) return env;
  return cli_value;
}

std::set<Int> parse_elist(const std::string& s) {
  std::set<Int> out;
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, ','))
    if (!term.empty()) out.insert(Int(term));
  return out;
}

void print_warnings(const MoonshineData& data) {
  for (const auto& w : data.warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for invariance groups of moonshine character series"};
  app.require_subcommand(1);
  std::string data_dir = "./data";
  app.add_option("--data", data_dir, "data directory (env MOONSHINE_DATA overrides)");

  std::string arg_cusp, arg_cusp2, arg_mat, arg_symbol, arg_elist, arg_format = "tsv";
  Int arg_n = 1, arg_e = 1;
  int arg_k = 1;
  bool flag_widths = false, flag_verify = false, flag_json = false, flag_big_primes = false;
  std::string arg_prefer = "a";
  long arg_cusp_limit = -1;
  std::string classes_path;

  auto* c_cusps = app.add_subcommand("cusps", "list Gamma0(N) cusp classes");
  c_cusps->add_option("N", arg_n)->required();
  c_cusps->add_flag("--widths", flag_widths);
  c_cusps->add_option("--format", arg_format)->check(CLI::IsMember({"tsv", "json"}));

  auto* c_canon = app.add_subcommand("canon", "canonical cusp class and witness");
  c_canon->add_option("cusp", arg_cusp)->required();
  c_canon->add_option("N", arg_n)->required();

  auto* c_equiv = app.add_subcommand("equiv", "cusp equivalence with witness");
  c_equiv->add_option("c1", arg_cusp)->required();
  c_equiv->add_option("c2", arg_cusp2)->required();
  c_equiv->add_option("N", arg_n)->required();

  auto* c_al = app.add_subcommand("al", "build an Atkin-Lehner involution W_e");
  c_al->add_option("N", arg_n)->required();
  c_al->add_option("e", arg_e)->required();
  c_al->add_option("--prefer", arg_prefer)->check(CLI::IsMember({"a", "d"}));

  auto* c_member = app.add_subcommand("member-ext", "membership in <Gamma0(N), W_e, ...>");
  c_member->add_option("matrix", arg_mat)->required();
  c_member->add_option("N", arg_n)->required();
  c_member->add_option("elist", arg_elist)->required();

  auto* c_symbol = app.add_subcommand("symbol", "group-symbol operations");
  auto* s_parse = c_symbol->add_subcommand("parse", "parse and reprint a symbol");
  s_parse->add_option("text", arg_symbol)->required();
  auto* s_orbit = c_symbol->add_subcommand("orbit", "orbit denominators of infinity");
  s_orbit->add_option("text", arg_symbol)->required();
  auto* s_equivinf = c_symbol->add_subcommand("equiv-inf", "cusp ~ infinity in the eigen group");
  s_equivinf->add_option("cusp", arg_cusp)->required();
  s_equivinf->add_option("text", arg_symbol)->required();
  c_symbol->require_subcommand(1);

  auto* c_transform = app.add_subcommand("transform", "P_c / U_{c,g} transform data");
  c_transform->add_option("symbol", arg_symbol)->required();
  c_transform->add_option("cusp", arg_cusp)->required();
  c_transform->add_option("N_chi", arg_n)->required();

  auto* c_phi = app.add_subcommand("phi", "classes with cusp ~ infinity in their eigen group");
  c_phi->add_option("cusp", arg_cusp)->required();
  c_phi->add_option("--classes", classes_path, "classes.tsv path (default <data>/classes.tsv)");

  auto* c_sing = app.add_subcommand("sing", "singular spectrum of t_chi at a cusp");
  c_sing->add_option("k", arg_k)->required()->check(CLI::Range(1, 194));
  c_sing->add_option("cusp", arg_cusp)->required();

  auto* c_invgroup = app.add_subcommand("invgroup", "invariance-group pipeline report");
  c_invgroup->add_option("k", arg_k)->required()->check(CLI::Range(1, 194));
  c_invgroup->add_option("--cusp-limit", arg_cusp_limit, "max cusp classes examined");
  c_invgroup->add_flag("--json", flag_json);
  c_invgroup->add_flag("--big-primes", flag_big_primes,
                       "only denominators with a prime factor >= 11");

  auto* c_nchi = app.add_subcommand("nchi", "N_chi for a character index");
  c_nchi->add_option("k", arg_k)->required()->check(CLI::Range(1, 194));

  auto* c_table1 = app.add_subcommand("table1", "verify the N_chi table fixture");
  c_table1->add_flag("--verify", flag_verify);

  auto* c_heads = app.add_subcommand("heads", "verify head decompositions");
  c_heads->add_flag("--verify", flag_verify);

  auto* c_distinct = app.add_subcommand("distinct", "number of distinct t_chi series");

  auto* c_oracle = app.add_subcommand("oracle", "brute-force ground truth");
  auto* o_cusps = c_oracle->add_subcommand("cusps", "cusp class count via P1(Z/N)");
  o_cusps->add_option("N", arg_n)->required();
  auto* o_width = c_oracle->add_subcommand("width", "cusp width by direct search");
  o_width->add_option("cusp", arg_cusp)->required();
  o_width->add_option("N", arg_n)->required();
  c_oracle->require_subcommand(1);

  // let --data (etc.) appear after the subcommand name too
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (auto* sc : a->get_subcommands([](const CLI::App*) { return true; })) {
      sc->fallthrough();
      enable_fallthrough(sc);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  data_dir = resolve_data_dir(data_dir);

  try {
    if (*c_cusps) {
      auto classes = cusp_classes(arg_n);
      if (arg_format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& cls : classes) {
          nlohmann::json e;
          e["denominator"] = cls.d.get_str();
          e["residue"] = cls.r.get_str();
          e["representative"] = cusp_to_string(cls.representative());
          if (flag_widths) e["width"] = cusp_width(cls.representative(), arg_n).get_str();
          j.push_back(std::move(e));
        }
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& cls : classes) {
          std::cout << cls.d << "\t" << cls.r << "\t" << cusp_to_string(cls.representative());
          if (flag_widths) std::cout << "\t" << cusp_width(cls.representative(), arg_n);
          std::cout << "\n";
        }
      }
    } else if (*c_canon) {
      auto [cls, w] = canonical_cusp(parse_cusp(arg_cusp), arg_n);
      std::cout << "denominator\t" << cls.d << "\nresidue\t" << cls.r << "\nrepresentative\t"
                << cusp_to_string(cls.representative()) << "\nwitness\t" << mat_to_string(w)
                << "\n";
    } else if (*c_equiv) {
      auto w = cusp_equivalent(parse_cusp(arg_cusp), parse_cusp(arg_cusp2), arg_n);
      if (w)
        std::cout << "equivalent\t" << mat_to_string(*w) << "\n";
      else
        std::cout << "not-equivalent\n";
    } else if (*c_al) {
      auto w = build_we(arg_n, arg_e, arg_prefer == "d" ? WePrefer::d_is_1 : WePrefer::a_is_1);
      std::cout << mat_to_string(w.matrix) << "\tdet=" << rat_to_string(w.matrix.det()) << "\n";
    } else if (*c_member) {
      auto e = extended_member(parse_mat(arg_mat), arg_n, parse_elist(arg_elist));
      if (e)
        std::cout << "member\te=" << *e << "\n";
      else
        std::cout << "not-member\n";
    } else if (*s_parse) {
      std::cout << print_symbol(parse_symbol(arg_symbol)) << "\n";
    } else if (*s_orbit) {
      for (const Int& d : orbit_denominators(parse_symbol(arg_symbol))) std::cout << d << "\n";
    } else if (*s_equivinf) {
      auto e = cusp_equiv_infinity(parse_cusp(arg_cusp), parse_symbol(arg_symbol));
      if (e)
        std::cout << "equivalent\te=" << *e << "\n";
      else
        std::cout << "not-equivalent\n";
    } else if (*c_transform) {
      auto tr = build_transform(parse_symbol(arg_symbol), parse_cusp(arg_cusp), arg_n);
      std::cout << "e\t" << tr.e_g << "\nu\t" << tr.u_residue << " (mod " << tr.u_modulus
                << ")\nscale\t" << rat_to_string(tr.scale) << "\nshift\t"
                << rat_to_string(tr.shift_for(tr.u_residue)) << " (quantum "
                << rat_to_string(tr.shift_modulus) << ")\nexponent\t"
                << rat_to_string(pole_exponent(tr.sym, tr.c)) << "\nP_c\t"
                << mat_to_string(tr.pc) << "\nW\t" << mat_to_string(tr.w) << "\n";
    } else if (*c_phi) {
      if (classes_path.empty()) classes_path = data_dir + "/classes.tsv";
      auto classes = load_classes(classes_path);
      for (const auto& id : phi_c(parse_cusp(arg_cusp), classes)) std::cout << id << "\n";
    } else if (*c_sing) {
      auto data = load_data(data_dir);
      print_warnings(data);
      auto s = singular_spectrum(arg_k, parse_cusp(arg_cusp), data);
      for (const auto& t : s.terms)
        std::cout << t.class_id << "\t" << rat_to_string(t.exponent) << "\t" << t.ambiguity_order
                  << "\t" << (t.char_nonzero ? "nonzero" : "zero") << "\n";
    } else if (*c_invgroup) {
      auto data = load_data(data_dir);
      print_warnings(data);
      InvarianceOptions opts;
      if (arg_cusp_limit >= 0) opts.cusp_limit = arg_cusp_limit;
      opts.big_prime_denominators = flag_big_primes;
      auto rep = invariance_group(arg_k, data, opts);
      if (flag_json) {
        std::cout << report_to_json(rep).dump(2) << "\n";
      } else {
        std::cout << "k\t" << rep.k << "\nN_chi\t" << rep.n << "\n";
        for (const auto& v : rep.cusp_verdicts)
          std::cout << "cusp\t" << cusp_to_string(v.cls.representative()) << "\t"
                    << verdict_name(v.verdict) << "\t" << v.detail << "\n";
        for (const auto& v : rep.translation_verdicts)
          std::cout << "r=" << v.r << "\t" << verdict_name(v.verdict) << "\t" << v.detail << "\n";
        std::cout << "conclusion\t" << rep.conclusion << "\n";
      }
    } else if (*c_nchi) {
      auto data = load_data(data_dir);
      print_warnings(data);
      Int n = n_chi(arg_k, data);
      std::cout << n << " = " << factorization_string(n) << "\n";
    } else if (*c_table1) {
      auto data = load_data(data_dir);
      print_warnings(data);
      auto rep = verify_table1(data, data_dir + "/table1.tsv");
      for (const auto& row : rep.rows) {
        std::cout << row.k << "\t" << row.fixture_n << "\t"
                  << (row.internal_ok && row.matches_data ? "ok" : "MISMATCH");
        if (row.flagged)
          std::cout << "\tFLAGGED printed=" << *row.printed << " factorization="
                    << row.factorization_product;
        std::cout << "\n";
      }
      std::cout << (rep.all_match ? "all 194 rows match" : "MISMATCHES PRESENT") << "\n";
      if (!rep.all_match) return 1;
    } else if (*c_heads) {
      auto data = load_data(data_dir);
      print_warnings(data);
      auto rep = verify_heads(data, data_dir + "/heads.tsv", data_dir + "/ch1.tsv");
      for (const auto& row : rep.rows)
        std::cout << "h=" << row.h << "\tdim=" << row.dimension << "\tsum=" << row.degree_sum
                  << "\t" << (row.ok ? "ok" : "MISMATCH") << "\n";
      std::cout << "c_h1 row " << (rep.ch1_consistent ? "consistent" : "INCONSISTENT") << "\n";
      if (!rep.all_ok) return 1;
    } else if (*c_distinct) {
      auto data = load_data(data_dir);
      print_warnings(data);
      std::cout << distinct_series_count(data) << "\n";
    } else if (*o_cusps) {
      std::cout << oracle_cusp_count_p1(arg_n) << "\n";
    } else if (*o_width) {
      std::cout << oracle_width(parse_cusp(arg_cusp), arg_n) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
