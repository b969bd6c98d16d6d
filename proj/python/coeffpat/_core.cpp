#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coeffpat/asympt.hpp"
#include "coeffpat/blocks.hpp"
#include "coeffpat/error.hpp"
#include "coeffpat/genfun.hpp"
#include "coeffpat/polytext.hpp"
#include "coeffpat/render.hpp"
#include "coeffpat/willson.hpp"

namespace py = pybind11;
using namespace coeffpat;

namespace {

py::int_ to_py(const BigInt& v) {
    PyObject* o = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!o) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(o);
}

py::object to_py(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(q.get_str()); }

py::list to_py(const std::vector<BigInt>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

FpPoly poly_arg(const std::string& text, std::uint32_t p) { return parse_poly(text, Prime(p)); }

Family family_arg(const std::string& name, std::uint32_t p) {
    if (name == "1px") return Family::one_plus_x(p);
    if (name == "1xx2" && p == 2) return Family::one_plus_x_plus_x2_mod2();
    throw ParseError("unknown family '" + name + "' for p=" + std::to_string(p));
}

py::dict recursion_dict(const RecursionSpec& r) {
    py::dict d;
    d["p"] = r.p;
    py::list rows;
    for (const auto& row : r.coeffs) rows.append(to_py(row));
    d["coeffs"] = rows;
    d["constant"] = to_py(r.constant);
    d["initials"] = to_py(r.initials);
    d["threshold"] = r.threshold;
    return d;
}

py::dict spectrum_dict(const FpPoly& f, const TransferSystem& sys, const SpectralResult& s) {
    py::dict d;
    d["poly"] = format_poly(f);
    d["states"] = sys.size();
    d["lambda"] = s.lambda;
    d["lo"] = to_py(s.lo);
    d["hi"] = to_py(s.hi);
    d["exact"] = s.exact ? to_py(*s.exact) : py::none();
    d["degree"] = s.degree ? py::cast(*s.degree) : py::none();
    d["minpoly"] = s.minpoly ? py::object(to_py(*s.minpoly)) : py::none();
    d["charpoly"] = to_py(s.charpoly);
    d["dimension"] = s.dimension;
    d["ratio"] = s.ratio;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coefficient patterns of polynomial powers over prime fields";

    static py::exception<ParseError> parseError(m, "ParseError", PyExc_ValueError);
    static py::exception<ComputationError> computationError(m, "ComputationError", PyExc_RuntimeError);

    m.def("parse_poly", [](const std::string& text, std::uint32_t p) { return poly_arg(text, p).coeffs(); },
          py::arg("text"), py::arg("p"), "coefficient list, low degree first");
    m.def("format_poly", [](const std::string& text, std::uint32_t p) { return format_poly(poly_arg(text, p)); },
          py::arg("text"), py::arg("p"));

    m.def("cumulative_count",
          [](const std::string& f, std::uint32_t p, std::uint64_t n) {
              return to_py(cumulative_count(poly_arg(f, p), n, DigitQuery::total()));
          },
          py::arg("poly"), py::arg("p"), py::arg("n"));

    m.def("line_complexity",
          [](const std::string& f, std::uint32_t p, std::size_t n, const std::string& method) {
              const auto how = method == "scan" ? LineComplexityMethod::Doubling : LineComplexityMethod::Closure;
              return to_py(line_complexity(poly_arg(f, p), n, how).value);
          },
          py::arg("poly"), py::arg("p"), py::arg("n"), py::arg("method") = "closure");
    m.def("line_complexity_profile",
          [](const std::string& f, std::uint32_t p, std::size_t n) {
              return to_py(line_complexity_profile(poly_arg(f, p), n));
          },
          py::arg("poly"), py::arg("p"), py::arg("n_max"));
    m.def("accessible_blocks",
          [](const std::string& f, std::uint32_t p, std::size_t n) {
              const BlockSet s = closure_accessible(poly_arg(f, p), n);
              std::vector<std::string> out;
              for (const auto& b : s.members()) out.push_back(block_text(b, Prime(p)));
              return out;
          },
          py::arg("poly"), py::arg("p"), py::arg("n"));
    m.def("a_1px", [](std::uint32_t p, std::uint64_t n) { return to_py(a_1px(p, n).value); }, py::arg("p"), py::arg("n"));
    m.def("infer_recursion",
          [](const std::string& f, std::uint32_t p, std::size_t window) {
              return recursion_dict(infer_recursion(poly_arg(f, p), window));
          },
          py::arg("poly"), py::arg("p"), py::arg("window") = 0);

    m.def("series_1px", [](std::uint32_t p, std::size_t N) { return to_py(series_1px(p, N).coeffs); }, py::arg("p"),
          py::arg("N"));
    m.def("series_1xx2", [](std::size_t N) { return to_py(series_1xx2(N).coeffs); }, py::arg("N"));

    m.def("extrema",
          [](const std::string& family, std::uint32_t p) {
              const ExtremaResult e = extrema(family_arg(family, p));
              py::dict d;
              d["inf"] = to_py(e.inf);
              d["sup"] = to_py(e.sup);
              d["arg_inf"] = to_py(e.argInf);
              d["arg_sup"] = to_py(e.argSup);
              return d;
          },
          py::arg("family"), py::arg("p"));
    m.def("limit_value",
          [](const std::string& family, std::uint32_t p, const std::string& x) {
              Rational q(x);
              q.canonicalize();
              return to_py(limit_function(family_arg(family, p))(q));
          },
          py::arg("family"), py::arg("p"), py::arg("x"), "x as a decimal fraction string such as '3/4'");

    m.def("willson",
          [](const std::string& f, std::uint64_t workCap) {
              const FpPoly g = poly_arg(f, 2);
              const TransferSystem sys = trim(build_transfer(g));
              return spectrum_dict(g, sys, minpoly_of_lambda(perron(sys), workCap));
          },
          py::arg("poly"), py::arg("work_cap") = 2'000'000);
    m.def("transfer_counts",
          [](const std::string& f, std::size_t K) { return to_py(transfer_counts(trim(build_transfer(poly_arg(f, 2))), K)); },
          py::arg("poly"), py::arg("K"));
    m.def("survey_tsv", [](std::size_t maxDeg, std::size_t K) { return survey_tsv(survey(maxDeg, K)); },
          py::arg("max_deg"), py::arg("K") = 10);
    m.def("enumerate_classes",
          [](std::size_t maxDeg) {
              std::vector<std::string> out;
              for (const auto& c : enumerate_classes(maxDeg)) out.push_back(format_poly(c.canonical));
              return out;
          },
          py::arg("max_deg"));
    m.def("canonicalize", [](const std::string& f) { return format_poly(canonicalize(poly_arg(f, 2)).canonical); },
          py::arg("poly"));
    m.def("eigen_bound", &eigen_bound, py::arg("deg"));

    m.def("render_pbm",
          [](const std::string& f, std::uint32_t p, std::size_t rows) { return render_fractal(poly_arg(f, p), rows).to_pbm(); },
          py::arg("poly"), py::arg("p"), py::arg("rows"));
    m.def("fractal_ink",
          [](const std::string& f, std::uint32_t p, std::size_t rows) { return render_fractal(poly_arg(f, p), rows).ink(); },
          py::arg("poly"), py::arg("p"), py::arg("rows"));
}
