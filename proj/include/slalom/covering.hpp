#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "slalom/word.hpp"

namespace slalom {

using Complex = std::complex<double>;

/// Which surface a path lives on: the twice punctured plane C \ {-1, 1} or
/// its logarithmic cover C \ iZ.
enum class Plane { Punctured, Cover };

/// Distance below which a point counts as sitting on a puncture.
inline constexpr double kPunctureTolerance = 1e-9;

/// A sampled curve. Points avoid the punctures of their plane and
/// consecutive points are distinct. A constant path is a single point.
class PolyPath {
 public:
  /// Validates the invariants above; throws DomainError on violation.
  static PolyPath make(std::vector<Complex> points, Plane plane);

  const std::vector<Complex>& points() const noexcept { return points_; }
  Plane plane() const noexcept { return plane_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Complex& front() const noexcept { return points_.front(); }
  const Complex& back() const noexcept { return points_.back(); }

 private:
  PolyPath(std::vector<Complex> points, Plane plane) : points_(std::move(points)), plane_(plane) {}

  std::vector<Complex> points_;
  Plane plane_;
};

/// f1(f2(z)) with f2(z) = (e^{pi z} - 1)/(e^{pi z} + 1), f1(w) = (w + 1/w)/2.
/// Throws DomainError within kPunctureTolerance of iZ.
Complex cover_map(Complex z);
Complex cover_derivative(Complex z);

struct LiftOptions {
  double tolerance = 1e-6;       // pointwise |cover_map(lift) - path|
  double safety_fraction = 0.25; // max step relative to distance to {-1, 1}
  int max_refinement_depth = 40;
};

/// Continues `start` along `path` by predictor-corrector Newton steps. The
/// result has one point per input point. Throws DomainError when `start`
/// is not over path.front() and NumericError when a segment cannot be
/// resolved.
PolyPath lift_path(const PolyPath& path, Complex start, const LiftOptions& options = {});

/// The point of the fiber over `w` (w on the imaginary axis) whose
/// imaginary part lies in (-1, 0). For w = 0 this is -i/2.
Complex base_lift(Complex w);

/// alpha_g^n: |n| turns around the unit circle about -1 (A1) or +1 (A2),
/// based at 0, counterclockwise for n > 0.
PolyPath standard_loop(Generator g, std::int64_t n, int samples_per_turn);

/// Concatenation of standard loops, one per term. Identity gives the
/// constant path at 0.
PolyPath word_to_curve(const FreeWord& w, int samples_per_turn);

enum class HalfPlane { Left, Right };

struct ElementaryPiece {
  HalfPlane half_plane = HalfPlane::Left;
  std::int64_t start_component = 0;  // start lies in (ik, i(k+1))
  std::int64_t end_component = 0;
  Complex start;
  Complex end;
  bool trivial = false;             // |start_component - end_component| == 1
  bool start_on_half_line = false;  // Im(start) in Z + 1/2
  bool end_on_half_line = false;

  /// Generator exponent carried by the piece: the upward displacement on
  /// the left, the downward displacement on the right.
  std::int64_t exponent() const noexcept;
};

struct SlalomDecomposition {
  std::vector<ElementaryPiece> pieces;

  FreeWord word() const;
};

/// Splits a lifted path at its crossings of the imaginary axis, discards
/// excursions that return to the component they left, and merges
/// neighbouring pieces on the same side. The endpoints of `lifted` must lie
/// on iR \ iZ.
SlalomDecomposition slalom_decompose(const PolyPath& lifted);

/// Reads the element of pi_1 represented by a path whose endpoints lie on
/// the imaginary axis (a loop at 0 in the usual case).
FreeWord curve_to_word(const PolyPath& path, const LiftOptions& options = {});

std::string_view half_plane_name(HalfPlane h) noexcept;

}  // namespace slalom
