#pragma once

#include <string_view>

#include <json.hpp>

#include "slalom/config.hpp"
#include "slalom/covering.hpp"
#include "slalom/elliptic.hpp"
#include "slalom/syllables.hpp"

namespace slalom {

// Insertion-ordered so that serialisation is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "slalom";
inline constexpr std::string_view kToolVersion = "0.1.0";

Json complex_json(Complex z);
Json syllables_json(const SyllableDecomposition& d);

/// {word, boundary, syllables, lambda, lower, upper, exceptional}
Json bounds_json(const SyllableDecomposition& d, BoundaryCondition bc, const LambdaBounds& b);

/// {M, extremal_length, conformal_module, method}; an infinite module is null.
Json modulus_json(const QuadModulus& q);
Json bound_check_json(const BoundCheckReport& r);
Json pieces_json(const SlalomDecomposition& d);
Json config_json(const Config& c);

/// {tool, version, command, input, config, result}
Json make_report(std::string_view command, Json input, const Config& config, Json result);

}  // namespace slalom
