#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slalom/covering.hpp"

namespace slalom {

/// One drawing area with the origin at its centre and `scale` pixels per
/// unit; y grows upwards.
class SvgPanel {
 public:
  SvgPanel(double scale, double half_width, double half_height, std::string title);

  double width_px() const noexcept { return 2.0 * scale_ * half_width_; }
  double height_px() const noexcept { return 2.0 * scale_ * half_height_; }

  void polyline(std::span<const Complex> points, std::string_view stroke, double stroke_width);
  void line(Complex a, Complex b, std::string_view stroke, double stroke_width, bool dashed = false);
  void dot(Complex at, double radius_px, std::string_view fill);
  void text(Complex at, std::string_view label, double size_px = 12.0);

  /// Panel body as an SVG group translated by `offset_x` pixels.
  std::string group(double offset_x) const;

 private:
  double px(double x) const noexcept;
  double py(double y) const noexcept;

  double scale_;
  double half_width_;
  double half_height_;
  std::string title_;
  std::vector<std::string> elements_;
};

/// Panels laid out left to right as a standalone SVG 1.1 document.
std::string compose_svg(std::span<const SvgPanel> panels);

/// Lifted slalom curve with the imaginary axis, the points of iZ and one
/// label per piece.
SvgPanel lift_panel(const PolyPath& lifted, const SlalomDecomposition& pieces, double scale);

/// A curve in C \ {-1, 1} with both punctures marked.
SvgPanel punctured_panel(const PolyPath& curve, double scale);

}  // namespace slalom
