#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace selectorate::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 84.0;
constexpr double kRight = 776.0;
constexpr double kTop = 52.0;
constexpr double kBottom = 540.0;
constexpr int kTicks = 5;

std::string coord(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

std::string tick_label(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;

  double map(double value, double pixel_lo, double pixel_hi) const {
    const double t = (value - lo) / (hi - lo);
    return pixel_lo + t * (pixel_hi - pixel_lo);
  }
};

Range data_range(const std::vector<SvgSeries>& series, bool x_axis) {
  bool seen = false;
  double lo = 0.0, hi = 0.0;
  for (const SvgSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      const double value = x_axis ? x : y;
      if (!std::isfinite(value)) continue;
      if (!seen) {
        lo = hi = value;
        seen = true;
      } else {
        lo = std::min(lo, value);
        hi = std::max(hi, value);
      }
    }
  }
  if (!seen) return Range{0.0, 1.0};
  if (hi - lo <= 0.0) {
    const double pad = std::max(1.0, std::abs(lo)) * 0.1;
    return Range{lo - pad, hi + pad};
  }
  const double pad = (hi - lo) * 0.05;
  return Range{lo - pad, hi + pad};
}

}  // namespace

std::string line_chart_svg(const std::string& title,
                           const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<SvgSeries>& series) {
  const Range xr = data_range(series, true);
  const Range yr = data_range(series, false);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out << "  <text x=\"400\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"18\">"
      << title << "</text>\n";

  // Grid and tick labels.
  for (int i = 0; i < kTicks; ++i) {
    const double t = static_cast<double>(i) / (kTicks - 1);
    const double x_value = xr.lo + t * (xr.hi - xr.lo);
    const double y_value = yr.lo + t * (yr.hi - yr.lo);
    const double px = xr.map(x_value, kLeft, kRight);
    const double py = yr.map(y_value, kBottom, kTop);
    out << "  <line x1=\"" << coord(px) << "\" y1=\"" << coord(kTop)
        << "\" x2=\"" << coord(px) << "\" y2=\"" << coord(kBottom)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "  <line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(py)
        << "\" x2=\"" << coord(kRight) << "\" y2=\"" << coord(py)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << coord(px) << "\" y=\"" << coord(kBottom + 20.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">"
        << tick_label(x_value) << "</text>\n";
    out << "  <text x=\"" << coord(kLeft - 8.0) << "\" y=\""
        << coord(py + 4.0)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"12\">"
        << tick_label(y_value) << "</text>\n";
  }

  // Axes.
  out << "  <line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kBottom)
      << "\" x2=\"" << coord(kRight) << "\" y2=\"" << coord(kBottom)
      << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  out << "  <line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kTop)
      << "\" x2=\"" << coord(kLeft) << "\" y2=\"" << coord(kBottom)
      << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  out << "  <text x=\"" << coord(0.5 * (kLeft + kRight)) << "\" y=\""
      << coord(kBottom + 44.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">"
      << x_label << "</text>\n";
  out << "  <text x=\"22\" y=\"" << coord(0.5 * (kTop + kBottom))
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\" transform=\"rotate(-90 22 "
      << coord(0.5 * (kTop + kBottom)) << ")\">" << y_label << "</text>\n";

  // Curves.
  for (const SvgSeries& s : series) {
    out << "  <polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (!first) out << " ";
      out << coord(xr.map(x, kLeft, kRight)) << ","
          << coord(yr.map(y, kBottom, kTop));
      first = false;
    }
    out << "\"/>\n";
  }

  // Legend.
  double legend_y = kTop + 16.0;
  for (const SvgSeries& s : series) {
    out << "  <line x1=\"" << coord(kRight - 150.0) << "\" y1=\""
        << coord(legend_y - 4.0) << "\" x2=\"" << coord(kRight - 120.0)
        << "\" y2=\"" << coord(legend_y - 4.0) << "\" stroke=\"" << s.color
        << "\" stroke-width=\"2\"/>\n";
    out << "  <text x=\"" << coord(kRight - 112.0) << "\" y=\""
        << coord(legend_y)
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << s.label
        << "</text>\n";
    legend_y += 20.0;
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace selectorate::cli
