#include "slalom/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <vector>

#include <CLI11.hpp>

#include "slalom/braid.hpp"
#include "slalom/errors.hpp"
#include "slalom/random.hpp"
#include "slalom/report.hpp"
#include "slalom/svg.hpp"

namespace slalom {

namespace {

struct ConfigFlags {
  std::string config_path;
  double c_minus = 0.0;
  double c_plus = 0.0;
  int samples_per_turn = 0;
  double lift_tolerance = 0.0;
  double svg_scale = 0.0;
  CLI::Option* c_minus_opt = nullptr;
  CLI::Option* c_plus_opt = nullptr;
  CLI::Option* spt_opt = nullptr;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* scale_opt = nullptr;
};

// Compiled defaults, then the config file, then individual flags.
Config resolve_config(const ConfigFlags& flags) {
  Config config;
  std::string path = flags.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("SLALOM_CONFIG"); env != nullptr) path = env;
  }
  if (!path.empty()) config = load_config(path, config);
  double c_minus = config.bound_constants.c_minus();
  double c_plus = config.bound_constants.c_plus();
  if (flags.c_minus_opt->count() > 0) c_minus = flags.c_minus;
  if (flags.c_plus_opt->count() > 0) c_plus = flags.c_plus;
  config.bound_constants = BoundConstants(c_minus, c_plus);
  if (flags.spt_opt->count() > 0) config.samples_per_turn = flags.samples_per_turn;
  if (flags.tol_opt->count() > 0) config.lift_tolerance = flags.lift_tolerance;
  if (flags.scale_opt->count() > 0) config.svg_scale = flags.svg_scale;
  config.validate();
  return config;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open " + path + " for writing");
  file << content;
  if (!file) throw DomainError("failed writing " + path);
}

LiftOptions lift_options(const Config& config) {
  LiftOptions options;
  options.tolerance = config.lift_tolerance;
  return options;
}

Json error_json(std::string_view command, std::string_view type, const std::string& message) {
  return Json{{"tool", kToolName},
              {"version", kToolVersion},
              {"command", command},
              {"error", Json{{"type", type}, {"message", message}}}};
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal length invariants of the twice punctured plane", "slalom"};
  app.require_subcommand(1);

  ConfigFlags flags;
  app.add_option("--config", flags.config_path, "key = value config file (default: $SLALOM_CONFIG)");
  flags.c_minus_opt = app.add_option("--c-minus", flags.c_minus, "lower bound constant");
  flags.c_plus_opt = app.add_option("--c-plus", flags.c_plus, "upper bound constant");
  flags.spt_opt = app.add_option("--samples-per-turn", flags.samples_per_turn, "samples per loop turn");
  flags.tol_opt = app.add_option("--lift-tolerance", flags.lift_tolerance, "pointwise lift tolerance");
  flags.scale_opt = app.add_option("--svg-scale", flags.svg_scale, "SVG pixels per unit");

  std::string command;
  Json input;
  // Filled by the chosen subcommand and run after the config is resolved.
  std::function<Json(const Config&)> action;

  std::string word_text;
  std::string boundary_text = "tr";
  auto* lambda_cmd = app.add_subcommand("lambda", "Lambda(w) with its extremal length bracket");
  lambda_cmd->add_option("word", word_text, "reduced word, e.g. \"a1^2 a2^-1\"")->required();
  lambda_cmd->add_option("--boundary", boundary_text, "tr or pb")->check(CLI::IsMember({"tr", "pb"}));
  lambda_cmd->callback([&] {
    command = "lambda";
    input = Json{{"word", word_text}, {"boundary", boundary_text}};
    action = [&](const Config& config) {
      const FreeWord w = parse_word(word_text);
      const BoundaryCondition bc = parse_boundary(boundary_text);
      Json result = bounds_json(decompose(w), bc, lambda_bounds(w, bc, config.bound_constants));
      result["exceptional_tr"] =
          classify_exceptional(w, BoundaryCondition::TotallyReal) == Exceptionality::Exceptional;
      result["exceptional_pb"] =
          classify_exceptional(w, BoundaryCondition::PerpendicularBisector) == Exceptionality::Exceptional;
      return result;
    };
  });

  auto* syllables_cmd = app.add_subcommand("syllables", "Syllable decomposition of a reduced word");
  syllables_cmd->add_option("word", word_text, "reduced word")->required();
  syllables_cmd->callback([&] {
    command = "syllables";
    input = Json{{"word", word_text}};
    action = [&](const Config&) {
      const SyllableDecomposition d = decompose(parse_word(word_text));
      return Json{{"word", format_word(d.source)},
                  {"count", d.syllables.size()},
                  {"syllables", syllables_json(d)},
                  {"lambda", lambda_invariant(d)}};
    };
  });

  double m_param = 0.0;
  std::string method_text = "closed";
  auto* rect_cmd = app.add_subcommand("rectangle-module", "Extremal length of the rectangle R^M");
  rect_cmd->add_option("--M", m_param, "rectangle parameter M >= 0")->required();
  rect_cmd->add_option("--method", method_text, "closed or quad")->check(CLI::IsMember({"closed", "quad"}));
  rect_cmd->callback([&] {
    command = "rectangle-module";
    input = Json{{"M", m_param}, {"method", method_text}};
    action = [&](const Config&) { return modulus_json(rect_extremal_length(m_param, parse_method(method_text))); };
  });

  double from = 0.5;
  double to = 1e4;
  std::size_t samples = 50;
  auto* bounds_cmd = app.add_subcommand("verify-bounds", "Sweep extremal_length(M) / log(1 + M)");
  bounds_cmd->add_option("--from", from, "smallest M (>= 1/2)")->required();
  bounds_cmd->add_option("--to", to, "largest M")->required();
  bounds_cmd->add_option("--samples", samples, "number of geometrically spaced samples")->required();
  bounds_cmd->callback([&] {
    command = "verify-bounds";
    input = Json{{"from", from}, {"to", to}, {"samples", samples}};
    action = [&](const Config&) {
      const std::vector<double> ms = log_spaced(from, to, samples);
      return bound_check_json(verify_log_bounds(ms));
    };
  });

  std::string svg_path;
  auto* lift_cmd = app.add_subcommand("lift", "Lift the standard curve of a word to C \\ iZ");
  lift_cmd->add_option("word", word_text, "reduced word")->required();
  lift_cmd->add_option("--svg", svg_path, "write an SVG drawing of the lift");
  lift_cmd->callback([&] {
    command = "lift";
    input = Json{{"word", word_text}};
    if (!svg_path.empty()) input["svg"] = svg_path;
    action = [&](const Config& config) {
      const FreeWord w = parse_word(word_text);
      const PolyPath curve = word_to_curve(w, config.samples_per_turn);
      const PolyPath lifted = lift_path(curve, base_lift(curve.front()), lift_options(config));
      const SlalomDecomposition pieces = slalom_decompose(lifted);
      if (!svg_path.empty()) {
        const SvgPanel panel = lift_panel(lifted, pieces, config.svg_scale);
        write_file(svg_path, compose_svg(std::span(&panel, 1)));
      }
      return Json{{"word", format_word(w)},
                  {"points", lifted.size()},
                  {"start", complex_json(lifted.front())},
                  {"end", complex_json(lifted.back())},
                  {"end_component", static_cast<std::int64_t>(std::floor(lifted.back().imag()))},
                  {"recovered_word", format_word(pieces.word())},
                  {"pieces", pieces_json(pieces)}};
    };
  });

  std::string braid_text;
  int samples_per_crossing = 64;
  auto* braid_cmd = app.add_subcommand("braid", "Image of a pure 3-braid and its invariant");
  braid_cmd->add_option("braidword", braid_text, "braid word, e.g. \"s1^2 s2^-2\"")->required();
  braid_cmd->add_option("--boundary", boundary_text, "tr or pb")->check(CLI::IsMember({"tr", "pb"}));
  braid_cmd->add_option("--samples-per-crossing", samples_per_crossing, "samples per crossing")
      ->check(CLI::Range(16, 1 << 20));
  braid_cmd->add_option("--svg", svg_path, "write an SVG of the cross-ratio curve and its lift");
  braid_cmd->callback([&] {
    command = "braid";
    input = Json{{"braid", braid_text}, {"boundary", boundary_text}, {"samples_per_crossing", samples_per_crossing}};
    if (!svg_path.empty()) input["svg"] = svg_path;
    action = [&](const Config& config) {
      const BraidWord b = parse_braid(braid_text);
      const BoundaryCondition bc = parse_boundary(boundary_text);
      const PolyPath curve = cross_ratio_curve(braid_to_strands(b, samples_per_crossing));
      const PolyPath lifted = lift_path(curve, base_lift(curve.front()), lift_options(config));
      const SlalomDecomposition pieces = slalom_decompose(lifted);
      const FreeWord w = pieces.word();
      if (!svg_path.empty()) {
        const std::vector<SvgPanel> panels{punctured_panel(curve, config.svg_scale),
                                           lift_panel(lifted, pieces, config.svg_scale)};
        write_file(svg_path, compose_svg(panels));
      }
      const SyllableDecomposition d = decompose(w);
      const LambdaBounds bounds = lambda_bounds(w, bc, config.bound_constants);
      return Json{{"braid", format_braid(b)},
                  {"word", format_word(w)},
                  {"boundary", boundary_name(bc)},
                  {"syllables", syllables_json(d)},
                  {"lambda", bounds.lambda},
                  {"lower", bounds.lower},
                  {"upper", bounds.upper},
                  {"exceptional", bounds.exceptional}};
    };
  });

  std::size_t count = 100;
  std::size_t maxlen = 12;
  std::uint64_t seed = 1;
  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "curve_to_word(word_to_curve(w)) == w on random words");
  roundtrip_cmd->add_option("--count", count, "number of random words")->required();
  roundtrip_cmd->add_option("--maxlen", maxlen, "maximal word length")->required();
  roundtrip_cmd->add_option("--seed", seed, "random seed");
  roundtrip_cmd->callback([&] {
    command = "roundtrip";
    input = Json{{"count", count}, {"maxlen", maxlen}, {"seed", seed}};
    action = [&](const Config& config) {
      std::mt19937_64 rng(seed);
      const int coarse = config.samples_per_turn;
      const int fine = 2 * config.samples_per_turn;
      std::size_t failures = 0;
      Json failed = Json::array();
      for (std::size_t i = 0; i < count; ++i) {
        const FreeWord w = random_reduced_word(rng, maxlen);
        const FreeWord a = curve_to_word(word_to_curve(w, coarse), lift_options(config));
        const FreeWord b = curve_to_word(word_to_curve(w, fine), lift_options(config));
        if (a != w || b != w) {
          ++failures;
          failed.push_back(Json{{"word", format_word(w)}, {"coarse", format_word(a)}, {"fine", format_word(b)}});
        }
      }
      return Json{{"count", count},
                  {"maxlen", maxlen},
                  {"seed", seed},
                  {"samples_per_turn", Json::array({coarse, fine})},
                  {"failures", failures},
                  {"failed", failed}};
    };
  });

  std::vector<const char*> argv{"slalom"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    const Config config = resolve_config(flags);
    const Json result = action(config);
    out << make_report(command, input, config, result).dump(2) << "\n";
    return 0;
  } catch (const ParseError& e) {
    Json diag = error_json(command, "parse_error", e.what());
    diag["error"]["column"] = e.column();
    err << diag.dump(2) << "\n";
  } catch (const Error& e) {
    std::string_view type = "error";
    if (dynamic_cast<const DomainError*>(&e) != nullptr) type = "domain_error";
    if (dynamic_cast<const NumericError*>(&e) != nullptr) type = "numeric_error";
    if (dynamic_cast<const OverflowError*>(&e) != nullptr) type = "overflow_error";
    err << error_json(command, type, e.what()).dump(2) << "\n";
  } catch (const std::exception& e) {
    err << error_json(command, "internal_error", e.what()).dump(2) << "\n";
  }
  return 1;
}

}  // namespace slalom
