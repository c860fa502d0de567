#include "slalom/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "slalom/errors.hpp"

namespace slalom {

namespace {

constexpr double kPi = std::numbers::pi;
// Lift points with |Re z| below this are treated as lying on the axis.
constexpr double kAxisTolerance = 1e-10;
// Crossing points closer than this to iZ cannot be assigned a component.
constexpr double kComponentTolerance = 1e-6;
constexpr std::size_t kMaxLoopPoints = 50'000'000;

bool near_cover_pole(Complex z) {
  return std::abs(z - Complex(0.0, std::round(z.imag()))) < kPunctureTolerance;
}

double puncture_distance(Complex w) { return std::min(std::abs(w - 1.0), std::abs(w + 1.0)); }

Complex unchecked_cover_map(Complex z) {
  // f1(f2(z)) = (tanh(pi z/2) + coth(pi z/2)) / 2 = coth(pi z).
  return 1.0 / std::tanh(kPi * z);
}

Complex unchecked_cover_derivative(Complex z) {
  const Complex s = std::sinh(kPi * z);
  return -kPi / (s * s);
}

bool newton_solve(Complex& z, Complex target) {
  const double scale = std::max(1.0, std::abs(target));
  for (int it = 0; it < 60; ++it) {
    if (near_cover_pole(z)) return false;
    const Complex residual = unchecked_cover_map(z) - target;
    if (std::abs(residual) <= 1e-14 * scale) return true;
    const Complex d = unchecked_cover_derivative(z);
    if (d == Complex(0.0, 0.0) || !std::isfinite(d.real()) || !std::isfinite(d.imag())) return false;
    z -= residual / d;
  }
  return std::abs(unchecked_cover_map(z) - target) <= 1e-12 * scale;
}

// Advances the lift `z` over cover_map(z) ~= from to the lift over `to`.
Complex advance(Complex z, Complex from, Complex to, int depth, const LiftOptions& options) {
  const double step = std::abs(to - from);
  bool subdivide = step > options.safety_fraction * puncture_distance(from);
  Complex next = z;
  if (!subdivide) {
    next = z + (to - from) / unchecked_cover_derivative(z);
    // The corrector must stay close to the predictor, otherwise Newton may
    // have converged on another sheet.
    const Complex predicted = next;
    subdivide = !newton_solve(next, to) || std::abs(next - predicted) > 0.5 * std::abs(predicted - z) + 1e-12;
  }
  if (!subdivide) return next;
  if (depth >= options.max_refinement_depth) {
    throw NumericError("path lifting exceeded the refinement limit near a puncture");
  }
  const Complex mid = 0.5 * (from + to);
  if (puncture_distance(mid) < kPunctureTolerance) {
    throw NumericError("path segment passes through a puncture");
  }
  z = advance(z, from, mid, depth + 1, options);
  return advance(z, mid, to, depth + 1, options);
}

void require_plane(const PolyPath& path, Plane plane, const char* what) {
  if (path.plane() != plane) throw DomainError(std::string(what) + ": path lies in the wrong plane");
}

std::int64_t component_of(Complex z) { return static_cast<std::int64_t>(std::floor(z.imag())); }

bool on_half_line(Complex z) {
  const double frac = z.imag() - std::floor(z.imag());
  return std::abs(frac - 0.5) < kComponentTolerance;
}

double distance_to_integer(double y) { return std::abs(y - std::round(y)); }

struct Excursion {
  Complex start;
  Complex end;
  int side = 0;  // -1 left, +1 right, 0 along the axis
};

int axis_side(Complex z) {
  if (z.real() < -kAxisTolerance) return -1;
  if (z.real() > kAxisTolerance) return 1;
  return 0;
}

// Cuts the lift at every point on or across the imaginary axis.
std::vector<Excursion> split_at_axis(const std::vector<Complex>& z) {
  std::vector<Excursion> out;
  Excursion current{z.front(), z.front(), 0};
  auto close_at = [&](Complex at) {
    current.end = at;
    out.push_back(current);
    current = Excursion{at, at, 0};
  };
  for (std::size_t j = 1; j < z.size(); ++j) {
    const int sa = axis_side(z[j - 1]);
    const int sb = axis_side(z[j]);
    if (sb == 0) {
      close_at(z[j]);
    } else if (sa != 0 && sa != sb) {
      const double t = z[j - 1].real() / (z[j - 1].real() - z[j].real());
      const Complex crossing = z[j - 1] + t * (z[j] - z[j - 1]);
      current.side = sa;
      close_at(Complex(0.0, crossing.imag()));
      current.side = sb;
    } else {
      current.side = sb;
    }
  }
  return out;
}

}  // namespace

PolyPath PolyPath::make(std::vector<Complex> points, Plane plane) {
  if (points.empty()) throw DomainError("a path needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Complex p = points[i];
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
      throw DomainError("path point " + std::to_string(i) + " is not finite");
    }
    if (plane == Plane::Punctured && puncture_distance(p) < kPunctureTolerance) {
      throw DomainError("path point " + std::to_string(i) + " hits a puncture at -1 or 1");
    }
    if (plane == Plane::Cover && near_cover_pole(p)) {
      throw DomainError("path point " + std::to_string(i) + " hits a point of iZ");
    }
    if (i > 0 && p == points[i - 1]) {
      throw DomainError("path has a zero-length segment at point " + std::to_string(i));
    }
  }
  return PolyPath(std::move(points), plane);
}

Complex cover_map(Complex z) {
  if (near_cover_pole(z)) throw DomainError("cover_map is undefined on iZ");
  return unchecked_cover_map(z);
}

Complex cover_derivative(Complex z) {
  if (near_cover_pole(z)) throw DomainError("cover_derivative is undefined on iZ");
  return unchecked_cover_derivative(z);
}

PolyPath lift_path(const PolyPath& path, Complex start, const LiftOptions& options) {
  require_plane(path, Plane::Punctured, "lift_path");
  if (near_cover_pole(start)) throw DomainError("lift start lies on iZ");
  const Complex w0 = path.front();
  if (std::abs(unchecked_cover_map(start) - w0) > 1e-8 * std::max(1.0, std::abs(w0))) {
    throw DomainError("lift start is not in the fiber over the first path point");
  }
  const auto& w = path.points();
  std::vector<Complex> lifted;
  lifted.reserve(w.size());
  lifted.push_back(start);
  Complex z = start;
  for (std::size_t j = 1; j < w.size(); ++j) {
    z = advance(z, w[j - 1], w[j], 0, options);
    if (std::abs(unchecked_cover_map(z) - w[j]) > options.tolerance) {
      throw NumericError("lifted point " + std::to_string(j) + " misses the path beyond tolerance");
    }
    lifted.push_back(z);
  }
  return PolyPath::make(std::move(lifted), Plane::Cover);
}

Complex base_lift(Complex w) {
  if (puncture_distance(w) < kPunctureTolerance) throw DomainError("no lift over a puncture");
  // coth(pi z) = w  <=>  e^{2 pi z} = (w + 1) / (w - 1).
  Complex z = std::log((w + 1.0) / (w - 1.0)) / (2.0 * kPi);
  z -= Complex(0.0, std::floor(z.imag()) + 1.0);
  return z;
}

PolyPath standard_loop(Generator g, std::int64_t n, int samples_per_turn) {
  if (n == 0) throw DomainError("standard_loop needs a nonzero exponent");
  if (samples_per_turn < 16) throw DomainError("samples_per_turn must be at least 16");
  const std::uint64_t turns = n < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  if (turns > kMaxLoopPoints / static_cast<std::uint64_t>(samples_per_turn)) {
    throw DomainError("standard_loop would exceed the point budget");
  }
  const std::size_t spt = static_cast<std::size_t>(samples_per_turn);
  const std::size_t total = static_cast<std::size_t>(turns) * spt;
  const double center = g == Generator::A1 ? -1.0 : 1.0;
  const double phase = g == Generator::A1 ? 0.0 : kPi;
  std::vector<Complex> points(total + 1);
  for (std::size_t j = 0; j <= total; ++j) {
    const std::size_t r = j % spt;
    if (r == 0) {
      points[j] = Complex(0.0, 0.0);
    } else {
      const double t = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(spt);
      points[j] = center + std::polar(1.0, phase + t);
    }
  }
  if (n < 0) std::reverse(points.begin(), points.end());
  return PolyPath::make(std::move(points), Plane::Punctured);
}

PolyPath word_to_curve(const FreeWord& w, int samples_per_turn) {
  if (samples_per_turn < 16) throw DomainError("samples_per_turn must be at least 16");
  std::vector<Complex> points{Complex(0.0, 0.0)};
  for (const Term& t : w.terms()) {
    const PolyPath loop = standard_loop(t.gen, t.exponent, samples_per_turn);
    points.insert(points.end(), loop.points().begin() + 1, loop.points().end());
  }
  return PolyPath::make(std::move(points), Plane::Punctured);
}

std::int64_t ElementaryPiece::exponent() const noexcept {
  return half_plane == HalfPlane::Left ? end_component - start_component : start_component - end_component;
}

FreeWord SlalomDecomposition::word() const {
  std::vector<Term> raw;
  raw.reserve(pieces.size());
  for (const ElementaryPiece& p : pieces) {
    raw.push_back({p.half_plane == HalfPlane::Left ? Generator::A1 : Generator::A2, p.exponent()});
  }
  return reduce(raw);
}

SlalomDecomposition slalom_decompose(const PolyPath& lifted) {
  require_plane(lifted, Plane::Cover, "slalom_decompose");
  for (const Complex& end : {lifted.front(), lifted.back()}) {
    if (axis_side(end) != 0) throw DomainError("slalom_decompose: endpoints must lie on the imaginary axis");
    if (distance_to_integer(end.imag()) < kComponentTolerance) {
      throw DomainError("slalom_decompose: endpoint lies on iZ");
    }
  }

  std::vector<ElementaryPiece> stack;
  for (const Excursion& e : split_at_axis(lifted.points())) {
    for (const Complex& p : {e.start, e.end}) {
      if (distance_to_integer(p.imag()) < kComponentTolerance) {
        throw NumericError("axis crossing within tolerance of iZ; refine the path");
      }
    }
    const std::int64_t k = component_of(e.start);
    const std::int64_t l = component_of(e.end);
    if (k == l) continue;
    if (e.side == 0) throw NumericError("path runs along the axis across a point of iZ");

    ElementaryPiece piece;
    piece.half_plane = e.side < 0 ? HalfPlane::Left : HalfPlane::Right;
    piece.start_component = k;
    piece.end_component = l;
    piece.start = e.start;
    piece.end = e.end;
    if (!stack.empty() && stack.back().half_plane == piece.half_plane) {
      ElementaryPiece merged = stack.back();
      stack.pop_back();
      merged.end = piece.end;
      merged.end_component = piece.end_component;
      if (merged.start_component != merged.end_component) stack.push_back(merged);
    } else {
      stack.push_back(piece);
    }
  }
  for (ElementaryPiece& p : stack) {
    const std::int64_t gap = p.end_component - p.start_component;
    p.trivial = gap == 1 || gap == -1;
    p.start_on_half_line = on_half_line(p.start);
    p.end_on_half_line = on_half_line(p.end);
  }
  return {std::move(stack)};
}

FreeWord curve_to_word(const PolyPath& path, const LiftOptions& options) {
  require_plane(path, Plane::Punctured, "curve_to_word");
  if (std::abs(path.front().real()) > 1e-12 || std::abs(path.back().real()) > 1e-12) {
    throw DomainError("curve_to_word: path endpoints must lie on the imaginary axis");
  }
  const PolyPath lifted = lift_path(path, base_lift(path.front()), options);
  return slalom_decompose(lifted).word();
}

std::string_view half_plane_name(HalfPlane h) noexcept { return h == HalfPlane::Left ? "left" : "right"; }

}  // namespace slalom
