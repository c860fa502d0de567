#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slalom/braid.hpp"
#include "slalom/cli.hpp"
#include "slalom/covering.hpp"
#include "slalom/elliptic.hpp"
#include "slalom/errors.hpp"
#include "slalom/syllables.hpp"
#include "slalom/word.hpp"

namespace py = pybind11;
using namespace slalom;

namespace {

py::dict bounds_dict(const LambdaBounds& b) {
  py::dict d;
  d["lambda"] = b.lambda;
  d["lower"] = b.lower;
  d["upper"] = b.upper;
  d["exceptional"] = b.exceptional;
  return d;
}

BoundConstants constants(double c_minus, double c_plus) { return BoundConstants(c_minus, c_plus); }

}  // namespace

PYBIND11_MODULE(_slalom, m) {
  m.doc() = "Extremal length invariants of the twice punctured plane";

  // Translators run newest first, so the base class is registered first.
  auto& base_error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base_error);
  py::register_exception<DomainError>(m, "DomainError", base_error);
  py::register_exception<OverflowError>(m, "ExponentOverflowError", base_error);
  py::register_exception<NumericError>(m, "NumericError", base_error);

  py::class_<FreeWord>(m, "FreeWord")
      .def(py::init([](const std::string& text) { return parse_word(text); }), py::arg("text") = "")
      .def_property_readonly("terms",
                             [](const FreeWord& w) {
                               py::list out;
                               for (const Term& t : w.terms()) {
                                 out.append(py::make_tuple(std::string(generator_name(t.gen)), t.exponent));
                               }
                               return out;
                             })
      .def("is_identity", &FreeWord::is_identity)
      .def("__len__", &FreeWord::size)
      .def("__str__", [](const FreeWord& w) { return format_word(w); })
      .def("__repr__", [](const FreeWord& w) { return "FreeWord(\"" + format_word(w) + "\")"; })
      .def("__eq__", [](const FreeWord& a, const FreeWord& b) { return a == b; })
      .def("__mul__", [](const FreeWord& a, const FreeWord& b) { return concat(a, b); })
      .def("inverse", [](const FreeWord& w) { return invert(w); });

  m.def("parse_word", &parse_word, py::arg("text"));
  m.def("concat", &concat, py::arg("u"), py::arg("v"));
  m.def("invert", &invert, py::arg("u"));

  m.def(
      "decompose",
      [](const FreeWord& w) {
        py::list out;
        for (const Syllable& s : decompose(w).syllables) {
          py::dict d;
          d["kind"] = std::string(kind_name(s.kind));
          d["terms"] = format_word(FreeWord::from_reduced(s.terms));
          d["degree"] = s.degree;
          out.append(d);
        }
        return out;
      },
      py::arg("word"));
  m.def("lambda_invariant", py::overload_cast<const FreeWord&>(&lambda_invariant), py::arg("word"));
  m.def(
      "classify_exceptional",
      [](const FreeWord& w, const std::string& boundary) {
        return classify_exceptional(w, parse_boundary(boundary)) == Exceptionality::Exceptional;
      },
      py::arg("word"), py::arg("boundary") = "tr");
  m.def(
      "lambda_bounds",
      [](const FreeWord& w, const std::string& boundary, double c_minus, double c_plus) {
        return bounds_dict(lambda_bounds(w, parse_boundary(boundary), constants(c_minus, c_plus)));
      },
      py::arg("word"), py::arg("boundary") = "tr", py::arg("c_minus") = 0.1, py::arg("c_plus") = 10.0);

  m.def("agm", &agm, py::arg("a"), py::arg("b"));
  m.def("complete_k", &complete_k, py::arg("k"));
  m.def(
      "rect_extremal_length",
      [](double m_param, const std::string& method) {
        const QuadModulus q = rect_extremal_length(m_param, parse_method(method));
        py::dict d;
        d["M"] = q.m_param;
        d["extremal_length"] = q.extremal_length;
        d["conformal_module"] = q.conformal_module;
        d["method"] = std::string(method_name(q.method));
        return d;
      },
      py::arg("M"), py::arg("method") = "closed");
  m.def(
      "verify_log_bounds",
      [](const std::vector<double>& ms) {
        const BoundCheckReport r = verify_log_bounds(ms);
        return py::make_tuple(r.ratio_min, r.ratio_max);
      },
      py::arg("m_values"));
  m.def(
      "elementary_slalom_bounds",
      [](std::int64_t k, std::int64_t l) {
        const SlalomRectBound b = elementary_slalom_bounds(k, l);
        py::dict d;
        d["m_param"] = b.m_param;
        d["rect_upper"] = b.rect_upper;
        d["log_term"] = b.log_term;
        return d;
      },
      py::arg("k"), py::arg("l"));

  m.def("cover_map", &cover_map, py::arg("z"));
  m.def("cover_derivative", &cover_derivative, py::arg("z"));
  m.def(
      "word_to_curve", [](const FreeWord& w, int spt) { return word_to_curve(w, spt).points(); }, py::arg("word"),
      py::arg("samples_per_turn") = 128);
  m.def(
      "curve_to_word",
      [](std::vector<Complex> points) { return curve_to_word(PolyPath::make(std::move(points), Plane::Punctured)); },
      py::arg("points"));
  m.def(
      "lift_word",
      [](const FreeWord& w, int spt) {
        const PolyPath curve = word_to_curve(w, spt);
        return lift_path(curve, base_lift(curve.front())).points();
      },
      py::arg("word"), py::arg("samples_per_turn") = 128);
  m.def(
      "slalom_pieces",
      [](const FreeWord& w, int spt) {
        const PolyPath curve = word_to_curve(w, spt);
        py::list out;
        for (const ElementaryPiece& p : slalom_decompose(lift_path(curve, base_lift(curve.front()))).pieces) {
          py::dict d;
          d["half_plane"] = std::string(half_plane_name(p.half_plane));
          d["start_component"] = p.start_component;
          d["end_component"] = p.end_component;
          d["exponent"] = p.exponent();
          d["trivial"] = p.trivial;
          out.append(d);
        }
        return out;
      },
      py::arg("word"), py::arg("samples_per_turn") = 128);

  m.def(
      "cstar", [](const std::string& braid) { return cstar(parse_braid(braid)); }, py::arg("braid"));
  m.def(
      "braid_invariant",
      [](const std::string& braid, const std::string& boundary, double c_minus, double c_plus) {
        return bounds_dict(braid_invariant(parse_braid(braid), parse_boundary(boundary), constants(c_minus, c_plus)));
      },
      py::arg("braid"), py::arg("boundary") = "tr", py::arg("c_minus") = 0.1, py::arg("c_plus") = 10.0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
