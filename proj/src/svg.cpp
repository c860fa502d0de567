#include "slalom/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace slalom {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Half extents covering the points plus a one unit margin.
std::pair<double, double> extents(std::span<const Complex> points) {
  double hw = 1.0;
  double hh = 1.0;
  for (const Complex& p : points) {
    hw = std::max(hw, std::abs(p.real()));
    hh = std::max(hh, std::abs(p.imag()));
  }
  return {std::ceil(hw) + 1.0, std::ceil(hh) + 1.0};
}

std::string piece_label(const ElementaryPiece& p) {
  std::string label = p.half_plane == HalfPlane::Left ? "a1" : "a2";
  if (p.exponent() != 1) label += "^" + std::to_string(p.exponent());
  return label;
}

}  // namespace

SvgPanel::SvgPanel(double scale, double half_width, double half_height, std::string title)
    : scale_(scale), half_width_(half_width), half_height_(half_height), title_(std::move(title)) {}

double SvgPanel::px(double x) const noexcept { return scale_ * (half_width_ + x); }
double SvgPanel::py(double y) const noexcept { return scale_ * (half_height_ - y); }

void SvgPanel::polyline(std::span<const Complex> points, std::string_view stroke, double stroke_width) {
  std::string pts;
  for (const Complex& p : points) {
    if (!pts.empty()) pts += ' ';
    pts += fmt(px(p.real())) + "," + fmt(py(p.imag()));
  }
  elements_.push_back("<polyline fill=\"none\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" +
                      fmt(stroke_width) + "\" points=\"" + pts + "\"/>");
}

void SvgPanel::line(Complex a, Complex b, std::string_view stroke, double stroke_width, bool dashed) {
  elements_.push_back("<line x1=\"" + fmt(px(a.real())) + "\" y1=\"" + fmt(py(a.imag())) + "\" x2=\"" +
                      fmt(px(b.real())) + "\" y2=\"" + fmt(py(b.imag())) + "\" stroke=\"" + std::string(stroke) +
                      "\" stroke-width=\"" + fmt(stroke_width) + "\"" +
                      (dashed ? " stroke-dasharray=\"4,3\"" : "") + "/>");
}

void SvgPanel::dot(Complex at, double radius_px, std::string_view fill) {
  elements_.push_back("<circle cx=\"" + fmt(px(at.real())) + "\" cy=\"" + fmt(py(at.imag())) + "\" r=\"" +
                      fmt(radius_px) + "\" fill=\"" + std::string(fill) + "\"/>");
}

void SvgPanel::text(Complex at, std::string_view label, double size_px) {
  elements_.push_back("<text x=\"" + fmt(px(at.real())) + "\" y=\"" + fmt(py(at.imag())) + "\" font-size=\"" +
                      fmt(size_px) + "\" font-family=\"sans-serif\">" + escape(label) + "</text>");
}

std::string SvgPanel::group(double offset_x) const {
  std::string out = "<g transform=\"translate(" + fmt(offset_x) + ",0)\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(width_px()) + "\" height=\"" + fmt(height_px()) +
         "\" fill=\"white\" stroke=\"#cccccc\"/>\n";
  out += "<text x=\"6\" y=\"16\" font-size=\"13\" font-family=\"sans-serif\">" + escape(title_) + "</text>\n";
  for (const std::string& e : elements_) out += e + "\n";
  out += "</g>\n";
  return out;
}

std::string compose_svg(std::span<const SvgPanel> panels) {
  double width = 0.0;
  double height = 0.0;
  for (const SvgPanel& p : panels) {
    width += p.width_px();
    height = std::max(height, p.height_px());
  }
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  double offset = 0.0;
  for (const SvgPanel& p : panels) {
    out += p.group(offset);
    offset += p.width_px();
  }
  out += "</svg>\n";
  return out;
}

SvgPanel lift_panel(const PolyPath& lifted, const SlalomDecomposition& pieces, double scale) {
  const auto [hw, hh] = extents(lifted.points());
  SvgPanel panel(scale, hw, hh, "lift in C \\ iZ");
  panel.line(Complex(0.0, -hh), Complex(0.0, hh), "#888888", 1.0, true);
  for (double k = -std::floor(hh); k <= std::floor(hh); k += 1.0) panel.dot(Complex(0.0, k), 3.0, "black");
  panel.polyline(lifted.points(), "#1f5fbf", 1.5);
  for (const ElementaryPiece& p : pieces.pieces) {
    const double side = p.half_plane == HalfPlane::Left ? -0.9 : 0.3;
    panel.text(Complex(side, 0.5 * (p.start.imag() + p.end.imag())), piece_label(p));
  }
  return panel;
}

SvgPanel punctured_panel(const PolyPath& curve, double scale) {
  const auto [hw, hh] = extents(curve.points());
  SvgPanel panel(scale, std::max(hw, 3.0), hh, "curve in C \\ {-1, 1}");
  panel.line(Complex(0.0, -hh), Complex(0.0, hh), "#888888", 1.0, true);
  panel.polyline(curve.points(), "#bf3f1f", 1.5);
  panel.dot(Complex(-1.0, 0.0), 3.5, "black");
  panel.dot(Complex(1.0, 0.0), 3.5, "black");
  panel.dot(Complex(0.0, 0.0), 2.5, "#1f8f1f");
  return panel;
}

}  // namespace slalom
