#pragma once

// Reference computations used only by the tests. None of them goes through
// the code paths they are compared against.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "slalom/syllables.hpp"
#include "slalom/word.hpp"

namespace slalom::oracle {

/// Gauss AGM iteration carried out with 50 decimal digits.
inline double agm_multiprecision(double a, double b) {
  using Big = boost::multiprecision::cpp_bin_float_50;
  Big x = a;
  Big y = b;
  for (int i = 0; i < 200; ++i) {
    const Big next_x = (x + y) / 2;
    const Big next_y = boost::multiprecision::sqrt(x * y);
    x = next_x;
    y = next_y;
    if (boost::multiprecision::abs(x - y) < Big("1e-45")) break;
  }
  return static_cast<double>(x);
}

/// K(k) = integral_0^{pi/2} dθ / sqrt(1 - k^2 sin^2 θ) by adaptive quadrature.
inline double complete_k_quadrature(double k) {
  auto f = [k](double theta) {
    const double s = std::sin(theta);
    return 1.0 / std::sqrt(1.0 - k * k * s * s);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, std::numbers::pi / 2, 15, 1e-13);
}

/// The composition f1(f2(z)) written out literally.
inline std::complex<double> cover_map_literal(std::complex<double> z) {
  const std::complex<double> e = std::exp(std::numbers::pi * z);
  const std::complex<double> w = (e - 1.0) / (e + 1.0);
  return 0.5 * (w + 1.0 / w);
}

/// Lift by continuous choice of branch of log((w + 1) / (w - 1)) / (2 pi):
/// the logarithm is unwrapped sample by sample.
inline std::vector<std::complex<double>> lift_by_logarithm(const std::vector<std::complex<double>>& w,
                                                           std::complex<double> start) {
  std::vector<std::complex<double>> out;
  out.reserve(w.size());
  double arg_prev = std::arg((w[0] + 1.0) / (w[0] - 1.0));
  double unwrapped = 2.0 * std::numbers::pi * start.imag();
  out.push_back(start);
  for (std::size_t j = 1; j < w.size(); ++j) {
    const std::complex<double> q = (w[j] + 1.0) / (w[j] - 1.0);
    double delta = std::arg(q) - arg_prev;
    while (delta > std::numbers::pi) delta -= 2.0 * std::numbers::pi;
    while (delta < -std::numbers::pi) delta += 2.0 * std::numbers::pi;
    unwrapped += delta;
    arg_prev = std::arg(q);
    out.emplace_back(std::log(std::abs(q)) / (2.0 * std::numbers::pi), unwrapped / (2.0 * std::numbers::pi));
  }
  return out;
}

/// Winding number of a closed polyline around `center`.
inline std::int64_t winding_number(const std::vector<std::complex<double>>& path, std::complex<double> center) {
  double total = 0.0;
  for (std::size_t j = 1; j < path.size(); ++j) total += std::arg((path[j] - center) / (path[j - 1] - center));
  return std::llround(total / (2.0 * std::numbers::pi));
}

/// Checks a syllable list against the three rules directly. Returns an
/// empty string when the partition is valid, otherwise a description.
inline std::string check_syllable_partition(const FreeWord& w, const SyllableDecomposition& d) {
  const auto& terms = w.terms();
  std::size_t next = 0;
  for (std::size_t s = 0; s < d.syllables.size(); ++s) {
    const Syllable& syl = d.syllables[s];
    if (syl.first_term != next) return "syllable " + std::to_string(s) + " does not start where the previous ended";
    if (syl.terms.empty()) return "empty syllable";
    std::uint64_t degree = 0;
    for (std::size_t i = 0; i < syl.terms.size(); ++i) {
      if (next + i >= terms.size() || !(syl.terms[i] == terms[next + i])) return "syllable terms differ from word";
      degree += static_cast<std::uint64_t>(std::llabs(syl.terms[i].exponent));
    }
    if (degree != syl.degree) return "degree is not the sum of |exponents|";
    const auto unit = [](const Term& t) { return t.exponent == 1 || t.exponent == -1; };
    switch (syl.kind) {
      case SyllableKind::BigPower:
        if (syl.terms.size() != 1 || unit(syl.terms[0])) return "bad big power";
        break;
      case SyllableKind::AlternatingRun:
        if (syl.terms.size() < 2) return "run shorter than two terms";
        for (const Term& t : syl.terms) {
          if (t.exponent != syl.terms[0].exponent || !unit(t)) return "run with mixed exponents";
        }
        break;
      case SyllableKind::Singleton:
        if (syl.terms.size() != 1 || !unit(syl.terms[0])) return "bad singleton";
        break;
    }
    if (syl.kind != SyllableKind::BigPower) {
      // Maximality: a +-1 block cannot be extended by an equal exponent.
      const std::int64_t e = syl.terms[0].exponent;
      if (next > 0 && terms[next - 1].exponent == e) return "unit block extendable to the left";
      const std::size_t after = next + syl.terms.size();
      if (after < terms.size() && terms[after].exponent == e) return "unit block extendable to the right";
    }
    next += syl.terms.size();
  }
  if (next != terms.size()) return "syllables do not cover the word";
  return {};
}

}  // namespace slalom::oracle
