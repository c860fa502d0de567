#pragma once

#include <filesystem>
#include <string_view>

#include "slalom/syllables.hpp"

namespace slalom {

struct Config {
  BoundConstants bound_constants;
  int samples_per_turn = 128;
  double lift_tolerance = 1e-6;
  double svg_scale = 40.0;  // pixels per unit

  /// Throws DomainError unless every numeric field is positive and
  /// samples_per_turn >= 16.
  void validate() const;
};

/// Applies `key = value` lines on top of `base`. Blank lines and lines
/// starting with '#' are ignored. Recognised keys: c_minus, c_plus,
/// samples_per_turn, lift_tolerance, svg_scale.
Config parse_config(std::string_view text, Config base = {});
Config load_config(const std::filesystem::path& file, Config base = {});

}  // namespace slalom
