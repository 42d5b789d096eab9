// Python bindings.  Cusps, matrices and group symbols cross the boundary as
// their canonical text forms (the same grammar the CLI speaks); unbounded
// integers become Python ints and exact fractions become fractions.Fraction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moonshine/gamma0.hpp"
#include "moonshine/monster.hpp"
#include "moonshine/oracle.hpp"
#include "moonshine/report_json.hpp"
#include "moonshine/spectra.hpp"
#include "moonshine/transforms.hpp"

namespace py = pybind11;
using namespace ms;

namespace {

py::int_ to_py(const Int& z) {
  PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Int to_int(const py::int_& v) { return Int(py::str(v).cast<std::string>()); }

py::object to_frac(const Rat& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(rat_to_string(r));
}

py::dict class_dict(const CuspClass& cls, bool with_width) {
  py::dict d;
  d["denominator"] = to_py(cls.d);
  d["residue"] = to_py(cls.r);
  d["representative"] = cusp_to_string(cls.representative());
  if (with_width) d["width"] = to_py(cusp_width(cls.representative(), cls.level));
  return d;
}

}  // namespace

PYBIND11_MODULE(_moonshine, m) {
  m.doc() = "exact cusp / Atkin-Lehner / invariance-group machinery";

  // ---- symbols ----
  m.def(
      "normalize_symbol",
      [](const std::string& text) { return print_symbol(parse_symbol(text)); },
      py::arg("text"), "Parse a group symbol n|h+e,f,... and print its canonical form.");
  m.def(
      "symbol_info",
      [](const std::string& text) {
        GroupSymbol s = parse_symbol(text);
        py::dict d;
        d["n"] = to_py(s.n);
        d["h"] = to_py(s.h);
        d["level"] = to_py(s.level());
        d["all_exact"] = s.all_exact;
        py::list harm;
        for (const Int& e : s.harmonics) harm.append(to_py(e));
        d["harmonics"] = harm;
        return d;
      },
      py::arg("text"));

  // ---- cusps of Gamma0(N) ----
  m.def(
      "cusp_classes",
      [](const py::int_& n) {
        Int nn = to_int(n);
        py::list out;
        for (const auto& cls : cusp_classes(nn)) out.append(class_dict(cls, true));
        return out;
      },
      py::arg("n"), "All cusp classes of Gamma0(n) with representatives and widths.");
  m.def(
      "canonical_cusp",
      [](const std::string& cusp, const py::int_& n) {
        auto [cls, wit] = canonical_cusp(parse_cusp(cusp), to_int(n));
        py::dict d = class_dict(cls, false);
        d["witness"] = mat_to_string(wit);
        return d;
      },
      py::arg("cusp"), py::arg("n"));
  m.def(
      "cusp_equivalent",
      [](const std::string& a, const std::string& b, const py::int_& n) -> py::object {
        auto w = cusp_equivalent(parse_cusp(a), parse_cusp(b), to_int(n));
        if (!w) return py::none();
        return py::str(mat_to_string(*w));
      },
      py::arg("a"), py::arg("b"), py::arg("n"),
      "Witness matrix in Gamma0(n) mapping a to b, or None.");
  m.def(
      "cusp_width",
      [](const std::string& cusp, const py::int_& n) {
        return to_py(cusp_width(parse_cusp(cusp), to_int(n)));
      },
      py::arg("cusp"), py::arg("n"));

  // ---- Atkin-Lehner ----
  m.def(
      "atkin_lehner",
      [](const py::int_& n, const py::int_& e) {
        return mat_to_string(build_we(to_int(n), to_int(e)).matrix);
      },
      py::arg("n"), py::arg("e"));
  m.def(
      "eigen_member",
      [](const std::string& mat, const std::string& symbol) -> py::object {
        auto e = eigen_member(parse_mat(mat), parse_symbol(symbol));
        if (!e) return py::none();
        return py::object(to_py(*e));
      },
      py::arg("matrix"), py::arg("symbol"),
      "Atkin-Lehner index e if the matrix lies in the symbol's group, else None.");

  // ---- orbit of infinity / transforms ----
  m.def(
      "cusp_equiv_infinity",
      [](const std::string& cusp, const std::string& symbol) -> py::object {
        auto e = cusp_equiv_infinity(parse_cusp(cusp), parse_symbol(symbol));
        if (!e) return py::none();
        return py::object(to_py(*e));
      },
      py::arg("cusp"), py::arg("symbol"));
  m.def(
      "pole_exponent",
      [](const std::string& symbol, const std::string& cusp) {
        return to_frac(pole_exponent(parse_symbol(symbol), parse_cusp(cusp)));
      },
      py::arg("symbol"), py::arg("cusp"));
  m.def(
      "transform",
      [](const std::string& symbol, const std::string& cusp, const py::int_& n_chi) {
        CuspTransform tr = build_transform(parse_symbol(symbol), parse_cusp(cusp),
                                           to_int(n_chi));
        py::dict d;
        d["e"] = to_py(tr.e_g);
        d["u_residue"] = to_py(tr.u_residue);
        d["u_modulus"] = to_py(tr.u_modulus);
        d["scale"] = to_frac(tr.scale);
        d["shift_modulus"] = to_frac(tr.shift_modulus);
        d["shift_at_residue"] = to_frac(tr.shift_for(tr.u_residue));
        d["pc"] = mat_to_string(tr.pc);
        d["w"] = mat_to_string(tr.w);
        return d;
      },
      py::arg("symbol"), py::arg("cusp"), py::arg("n_chi"));

  // ---- character table data ----
  py::class_<MoonshineData>(m, "Data")
      .def(py::init([](const std::string& dir) { return load_data(dir); }), py::arg("dir"))
      .def("n_chi", [](const MoonshineData& d, int k) { return to_py(n_chi(k, d)); },
           py::arg("k"))
      .def("class_symbol",
           [](const MoonshineData& d, const std::string& id) {
             return print_symbol(d.cls(id).sym);
           },
           py::arg("class_id"))
      .def("distinct_series_count",
           [](const MoonshineData& d) { return distinct_series_count(d); })
      .def("is_trivial_character",
           [](const MoonshineData& d, int k) { return is_trivial_character(k, d); },
           py::arg("k"))
      .def("phi",
           [](const MoonshineData& d, const std::string& cusp) {
             auto s = phi_c(parse_cusp(cusp), d.classes);
             return std::vector<std::string>(s.begin(), s.end());
           },
           py::arg("cusp"), "Class ids whose group carries the cusp into infinity.")
      .def("singular_spectrum",
           [](const MoonshineData& d, int k, const std::string& cusp) {
             SingularSpectrum s = singular_spectrum(k, parse_cusp(cusp), d);
             py::list out;
             for (const auto& t : s.terms) {
               py::dict e;
               e["class_id"] = t.class_id;
               e["exponent"] = to_frac(t.exponent);
               e["ambiguity_order"] = to_py(t.ambiguity_order);
               e["char_nonzero"] = t.char_nonzero;
               out.append(e);
             }
             return out;
           },
           py::arg("k"), py::arg("cusp"))
      .def("invariance_report",
           [](const MoonshineData& d, int k, std::optional<long> cusp_limit,
              bool big_prime_denominators) {
             InvarianceOptions opts;
             opts.cusp_limit = cusp_limit;
             opts.big_prime_denominators = big_prime_denominators;
             return report_to_json(invariance_group(k, d, opts)).dump(2);
           },
           py::arg("k"), py::arg("cusp_limit") = py::none(),
           py::arg("big_prime_denominators") = false,
           "Full invariance-group report for character k, as a JSON string.");
}
