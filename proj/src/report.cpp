#include "slalom/report.hpp"

#include <cmath>

namespace slalom {

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json syllables_json(const SyllableDecomposition& d) {
  Json out = Json::array();
  for (const Syllable& s : d.syllables) {
    out.push_back(Json{{"kind", kind_name(s.kind)},
                       {"terms", format_word(FreeWord::from_reduced(s.terms))},
                       {"degree", s.degree}});
  }
  return out;
}

Json bounds_json(const SyllableDecomposition& d, BoundaryCondition bc, const LambdaBounds& b) {
  return Json{{"word", format_word(d.source)},
              {"boundary", boundary_name(bc)},
              {"syllables", syllables_json(d)},
              {"lambda", b.lambda},
              {"lower", b.lower},
              {"upper", b.upper},
              {"exceptional", b.exceptional}};
}

Json modulus_json(const QuadModulus& q) {
  Json module = std::isfinite(q.conformal_module) ? Json(q.conformal_module) : Json(nullptr);
  return Json{{"M", q.m_param},
              {"extremal_length", q.extremal_length},
              {"conformal_module", module},
              {"method", method_name(q.method)}};
}

Json bound_check_json(const BoundCheckReport& r) {
  return Json{{"m_range", r.m_range},
              {"ratio_min", r.ratio_min},
              {"ratio_max", r.ratio_max},
              {"ratio_spread", r.ratio_max / r.ratio_min}};
}

Json pieces_json(const SlalomDecomposition& d) {
  Json out = Json::array();
  for (const ElementaryPiece& p : d.pieces) {
    out.push_back(Json{{"half_plane", half_plane_name(p.half_plane)},
                       {"start_component", p.start_component},
                       {"end_component", p.end_component},
                       {"exponent", p.exponent()},
                       {"trivial", p.trivial},
                       {"start", complex_json(p.start)},
                       {"end", complex_json(p.end)},
                       {"start_on_half_line", p.start_on_half_line},
                       {"end_on_half_line", p.end_on_half_line}});
  }
  return out;
}

Json config_json(const Config& c) {
  return Json{{"c_minus", c.bound_constants.c_minus()},
              {"c_plus", c.bound_constants.c_plus()},
              {"samples_per_turn", c.samples_per_turn},
              {"lift_tolerance", c.lift_tolerance},
              {"svg_scale", c.svg_scale}};
}

Json make_report(std::string_view command, Json input, const Config& config, Json result) {
  return Json{{"tool", kToolName},
              {"version", kToolVersion},
              {"command", command},
              {"input", std::move(input)},
              {"config", config_json(config)},
              {"result", std::move(result)}};
}

}  // namespace slalom
