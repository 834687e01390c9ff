#include "tdpp/svg.hpp"

#include <cstdio>
#include <sstream>

#include "tdpp/verify.hpp"

namespace tdpp {
namespace {

constexpr double kSide = 400.0;
constexpr double kMargin = 30.0;

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double to_px_x(double x) { return kMargin + x * kSide; }
double to_px_y(double y) { return kMargin + (1.0 - y) * kSide; }

}  // namespace

std::string render_region_svg(const Region& region) {
  const double total = kSide + 2.0 * kMargin;
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed3(total) << "\" height=\""
      << fixed3(total) << "\" viewBox=\"0 0 " << fixed3(total) << ' ' << fixed3(total) << "\">\n";
  svg << "  <title>region A: " << to_string(region.case_tag)
      << (region.complemented ? ", h = 1 - indicator" : "") << "</title>\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << fixed3(total) << "\" height=\"" << fixed3(total)
      << "\" fill=\"white\"/>\n";

  svg << "  <g id=\"boxes\" fill=\"#9a9a9a\" stroke=\"#333333\" stroke-width=\"0.5\">\n";
  for (const auto& box : region.boxes) {
    svg << "    <rect x=\"" << fixed3(to_px_x(box.x_lo)) << "\" y=\"" << fixed3(to_px_y(box.y_hi))
        << "\" width=\"" << fixed3((box.x_hi - box.x_lo) * kSide) << "\" height=\""
        << fixed3((box.y_hi - box.y_lo) * kSide) << "\"/>\n";
  }
  svg << "  </g>\n";

  const auto cuts = build_transfer(region).breakpoints;
  svg << "  <g id=\"grid\" stroke=\"#bbbbbb\" stroke-width=\"0.5\" stroke-dasharray=\"3,3\">\n";
  for (double t : cuts) {
    svg << "    <line x1=\"" << fixed3(to_px_x(t)) << "\" y1=\"" << fixed3(to_px_y(0.0))
        << "\" x2=\"" << fixed3(to_px_x(t)) << "\" y2=\"" << fixed3(to_px_y(1.0)) << "\"/>\n";
    svg << "    <line x1=\"" << fixed3(to_px_x(0.0)) << "\" y1=\"" << fixed3(to_px_y(t))
        << "\" x2=\"" << fixed3(to_px_x(1.0)) << "\" y2=\"" << fixed3(to_px_y(t)) << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <rect x=\"" << fixed3(kMargin) << "\" y=\"" << fixed3(kMargin) << "\" width=\""
      << fixed3(kSide) << "\" height=\"" << fixed3(kSide)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  svg << "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\" "
         "dominant-baseline=\"central\">\n";
  for (const auto& box : region.boxes) {
    svg << "    <text x=\"" << fixed3(to_px_x(0.5 * (box.x_lo + box.x_hi))) << "\" y=\""
        << fixed3(to_px_y(0.5 * (box.y_lo + box.y_hi))) << "\">" << box.label << "</text>\n";
  }
  svg << "  </g>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tdpp
