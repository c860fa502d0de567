#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace slalom {

/// Arithmetic-geometric mean of two positive numbers.
double agm(double a, double b);

/// Complete elliptic integral of the first kind K(k), modulus convention,
/// for 0 <= k < 1.
double complete_k(double k);

/// K evaluated from the complementary modulus k' = sqrt(1 - k^2), which
/// keeps full precision when k is close to 1.
double complete_k_from_complement(double k_prime);

enum class ModulusMethod { ClosedForm, Quadrature };

/// Extremal length of the rectangle R^M whose conformal image is the left
/// half-plane with the horizontal sides sent to [-i(M+1), -iM] and
/// [iM, i(M+1)]. `conformal_module` is +inf when M = 0.
struct QuadModulus {
  double m_param = 0.0;
  double extremal_length = 0.0;
  double conformal_module = 0.0;
  ModulusMethod method = ModulusMethod::ClosedForm;
};

QuadModulus rect_extremal_length(double m_param, ModulusMethod method);

struct BoundCheckReport {
  std::vector<double> m_range;
  double ratio_min = 0.0;
  double ratio_max = 0.0;
};

/// Extrema of extremal_length(M) / log(1 + M) over the samples (all >= 1/2).
BoundCheckReport verify_log_bounds(std::span<const double> m_values);

/// `count` samples spaced geometrically from `from` to `to` inclusive.
std::vector<double> log_spaced(double from, double to, std::size_t count);

struct SlalomRectBound {
  double m_param = 0.0;     // (|k - l| - 1) / 2
  double rect_upper = 0.0;  // extremal length of R^M, an upper bound
  double log_term = 0.0;    // log(1 + M)
};

/// Rectangle upper bound for an elementary slalom curve joining the
/// components (ik, i(k+1)) and (il, i(l+1)). Requires |k - l| >= 2.
SlalomRectBound elementary_slalom_bounds(std::int64_t k, std::int64_t l);

std::string_view method_name(ModulusMethod m) noexcept;
/// Accepts "closed" and "quad".
ModulusMethod parse_method(std::string_view text);

}  // namespace slalom
