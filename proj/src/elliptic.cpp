#include "slalom/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "slalom/errors.hpp"

namespace slalom {

namespace {

constexpr double kAgmTolerance = 1e-15;
constexpr double kQuadTolerance = 1e-12;
constexpr double kQuadAcceptable = 1e-11;
constexpr unsigned kQuadMaxDepth = 20;

template <class F>
double integrate(F f, double a, double b) {
  if (b <= a) return 0.0;
  double error = 0.0;
  double l1 = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, kQuadMaxDepth, kQuadTolerance, &error, &l1);
  if (!std::isfinite(value) || error > kQuadAcceptable * std::max(1.0, l1)) {
    std::ostringstream msg;
    msg << "quadrature did not converge on [" << a << ", " << b << "] (error estimate " << error << ")";
    throw NumericError(msg.str());
  }
  return value;
}

// Side lengths of the image rectangle of the left half-plane under
// z -> integral_0^z dζ / sqrt((ζ^2 + M^2)(ζ^2 + (M+1)^2)).
// With ζ = it the integrand is real on the imaginary axis; the inverse
// square-root endpoint singularities are removed by t = M -+ s^2 and
// t = M + 1 - s^2. On the vertical side s = sinh(u) also cancels the
// slowly decaying factor 1 / sqrt(1 + s^2), which matters for large M.
double vertical_side(double m) {
  auto f = [=](double u) {
    const double s = std::sinh(u);
    return 2.0 / std::sqrt((2.0 * m - s * s) * (2.0 * m + 1.0 - s * s));
  };
  return 2.0 * integrate(f, 0.0, std::asinh(std::sqrt(m)));
}

double horizontal_side(double m) {
  // Lower half [M, M + 1/2]: t = M + s^2, t^2 - M^2 = s^2 (2M + s^2).
  auto lower = [=](double s) {
    const double s2 = s * s;
    return 2.0 / std::sqrt((2.0 * m + s2) * (1.0 - s2) * (2.0 * m + 1.0 + s2));
  };
  // Upper half [M + 1/2, M + 1]: t = M + 1 - s^2, (M+1)^2 - t^2 = s^2 (2M + 2 - s^2).
  auto upper = [=](double s) {
    const double s2 = s * s;
    return 2.0 / std::sqrt((2.0 * m + 2.0 - s2) * (1.0 - s2) * (2.0 * m + 1.0 - s2));
  };
  const double half = std::sqrt(0.5);
  return integrate(lower, 0.0, half) + integrate(upper, 0.0, half);
}

}  // namespace

double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("agm requires finite positive arguments");
  }
  for (int i = 0; i < 64; ++i) {
    if (std::abs(a - b) <= kAgmTolerance * a) break;
    const double arith = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = arith;
  }
  return 0.5 * (a + b);
}

double complete_k_from_complement(double k_prime) {
  if (!(k_prime > 0.0) || !(k_prime <= 1.0)) {
    throw DomainError("complementary modulus must lie in (0, 1]");
  }
  return std::numbers::pi / (2.0 * agm(1.0, k_prime));
}

double complete_k(double k) {
  if (!(k >= 0.0) || !(k < 1.0)) {
    throw DomainError("complete_k requires 0 <= k < 1");
  }
  return complete_k_from_complement(std::sqrt((1.0 - k) * (1.0 + k)));
}

QuadModulus rect_extremal_length(double m_param, ModulusMethod method) {
  if (!(m_param >= 0.0) || !std::isfinite(m_param)) {
    throw DomainError("M must be a finite nonnegative number");
  }
  QuadModulus out;
  out.m_param = m_param;
  out.method = method;
  if (m_param == 0.0) {
    out.extremal_length = 0.0;
    out.conformal_module = std::numeric_limits<double>::infinity();
    return out;
  }
  if (method == ModulusMethod::ClosedForm) {
    // The four vertices -(M+1), -M, M, M+1 on the rotated axis reduce the
    // side ratio to 2 K(k) / K(k') with k = M / (M+1). k' is formed
    // directly to avoid cancellation in 1 - k^2 for large M.
    const double mp1 = m_param + 1.0;
    const double k = m_param / mp1;
    const double k_prime = std::sqrt(2.0 * m_param + 1.0) / mp1;
    out.extremal_length = 2.0 * complete_k_from_complement(k_prime) / complete_k_from_complement(k);
  } else {
    out.extremal_length = vertical_side(m_param) / horizontal_side(m_param);
  }
  out.conformal_module = 1.0 / out.extremal_length;
  return out;
}

BoundCheckReport verify_log_bounds(std::span<const double> m_values) {
  if (m_values.empty()) throw DomainError("verify_log_bounds needs at least one sample");
  BoundCheckReport report;
  report.m_range.assign(m_values.begin(), m_values.end());
  report.ratio_min = std::numeric_limits<double>::infinity();
  report.ratio_max = -std::numeric_limits<double>::infinity();
  for (double m : m_values) {
    if (!(m >= 0.5)) throw DomainError("log bounds are only checked for M >= 1/2");
    const double ratio = rect_extremal_length(m, ModulusMethod::ClosedForm).extremal_length / std::log1p(m);
    report.ratio_min = std::min(report.ratio_min, ratio);
    report.ratio_max = std::max(report.ratio_max, ratio);
  }
  return report;
}

std::vector<double> log_spaced(double from, double to, std::size_t count) {
  if (count == 0 || !(from > 0.0) || !(to >= from)) {
    throw DomainError("log_spaced needs count >= 1 and 0 < from <= to");
  }
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = from;
    return out;
  }
  const double ratio = std::log(to / from);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = from * std::exp(ratio * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  out.front() = from;
  out.back() = to;
  return out;
}

SlalomRectBound elementary_slalom_bounds(std::int64_t k, std::int64_t l) {
  std::int64_t diff = 0;
  if (__builtin_sub_overflow(k, l, &diff) || diff == std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("component difference out of range");
  }
  const std::int64_t gap = diff < 0 ? -diff : diff;
  if (gap < 2) {
    throw DomainError("elementary slalom bound requires |k - l| >= 2");
  }
  SlalomRectBound out;
  out.m_param = (static_cast<double>(gap) - 1.0) / 2.0;
  out.rect_upper = rect_extremal_length(out.m_param, ModulusMethod::ClosedForm).extremal_length;
  out.log_term = std::log1p(out.m_param);
  return out;
}

std::string_view method_name(ModulusMethod m) noexcept {
  return m == ModulusMethod::ClosedForm ? "closed" : "quad";
}

ModulusMethod parse_method(std::string_view text) {
  if (text == "closed") return ModulusMethod::ClosedForm;
  if (text == "quad") return ModulusMethod::Quadrature;
  throw DomainError("method must be 'closed' or 'quad', got '" + std::string(text) + "'");
}

}  // namespace slalom
