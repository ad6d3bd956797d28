#pragma once

// Deterministic SVG 1.1 renderings: osculating paths as rounded polylines on
// the triangular grid, domino tilings as rectangles.  Element order is fixed
// (grid, then paths in canonical trace order), coordinates are integers.

#include <string>
#include <vector>

#include "ice20v/apm.hpp"
#include "ice20v/lattice.hpp"
#include "ice20v/region.hpp"

namespace ice20v {

namespace svgdetail {

constexpr int kScale = 40;
constexpr int kMargin = 40;

inline std::string header(int w, int h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(w) + "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " +
         std::to_string(w) + " " + std::to_string(h) + "\">\n";
}

}  // namespace svgdetail

inline std::string render_config_svg(const LatticeConfig& c) {
  using namespace svgdetail;
  std::size_t R = c.rows(), C = c.cols();
  // lattice vertex (x, y) with y up -> pixel coordinates
  auto px = [&](double x) { return int(kMargin + (x - 1) * kScale + 0.5); };
  auto py = [&](double y) { return int(kMargin + (double(R) - y) * kScale + 0.5); };
  int w = 2 * kMargin + int(C - 1) * kScale;
  int h = 2 * kMargin + int(R - 1) * kScale;
  std::string out = header(w + kScale, h + kScale);
  out += "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (std::size_t y = 1; y <= R; ++y)
    out += "<line x1=\"" + std::to_string(px(1) - kScale / 2) + "\" y1=\"" +
           std::to_string(py(double(y))) + "\" x2=\"" + std::to_string(px(double(C)) + kScale / 2) +
           "\" y2=\"" + std::to_string(py(double(y))) + "\"/>\n";
  for (std::size_t x = 1; x <= C; ++x)
    out += "<line x1=\"" + std::to_string(px(double(x))) + "\" y1=\"" +
           std::to_string(py(double(R)) - kScale / 2) + "\" x2=\"" + std::to_string(px(double(x))) +
           "\" y2=\"" + std::to_string(py(1) + kScale / 2) + "\"/>\n";
  out += "</g>\n";

  TurningProfile prof = turning_profile(c);
  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  std::size_t ci = 0;
  for (const auto& path : prof.paths) {
    if (path.vertices.empty()) continue;
    std::string d;
    // start half-step outside the first vertex along the first axis
    auto [x0, y0] = path.vertices.front();
    double sx = double(x0), sy = double(y0);
    switch (path.first_axis) {
      case EdgeAxis::H: sx -= 0.5; break;
      case EdgeAxis::V: sy += 0.5; break;
      case EdgeAxis::D: sx -= 0.5, sy += 0.5; break;
    }
    d = "M " + std::to_string(px(sx)) + " " + std::to_string(py(sy));
    for (auto [vx, vy] : path.vertices)
      d += " L " + std::to_string(px(double(vx))) + " " + std::to_string(py(double(vy)));
    auto [xl, yl] = path.vertices.back();
    double ex = double(xl), ey = double(yl);
    switch (path.last_axis) {
      case EdgeAxis::H: ex += 0.5; break;
      case EdgeAxis::V: ey -= 0.5; break;
      case EdgeAxis::D: ex += 0.5, ey -= 0.5; break;
    }
    d += " L " + std::to_string(px(ex)) + " " + std::to_string(py(ey));
    out += "<path fill=\"none\" stroke=\"" + std::string(colors[ci % 8]) +
           "\" stroke-width=\"3\" stroke-linejoin=\"round\" stroke-linecap=\"round\" d=\"" + d +
           "\"/>\n";
    ++ci;
  }
  out += "</svg>\n";
  return out;
}

inline std::string render_tiling_svg(const Region& r, const Tiling& tiling) {
  using namespace svgdetail;
  const int s = kScale / 2;
  int w = 2 * kMargin + int(r.width()) * s;
  int h = 2 * kMargin + int(r.height()) * s;
  std::string out = header(w, h);
  out += "<g stroke=\"#333333\" stroke-width=\"2\">\n";
  for (const auto& dom : tiling) {
    int x = kMargin + int(dom.x) * s;
    int y = kMargin + int(dom.y) * s;
    int dw = dom.horizontal ? 2 * s : s;
    int dh = dom.horizontal ? s : 2 * s;
    out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
           std::to_string(dw) + "\" height=\"" + std::to_string(dh) + "\" fill=\"" +
           (dom.horizontal ? "#aec7e8" : "#ffbb78") + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace ice20v
