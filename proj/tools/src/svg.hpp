#pragma once

#include <string>
#include <utility>
#include <vector>

namespace selectorate::cli {

struct SvgSeries {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

/// Self-contained 800x600 SVG line chart: linear axes, tick labels, one
/// polyline per series sampled exactly at the given points, legend in the
/// top-right corner. No external references, deterministic output.
std::string line_chart_svg(const std::string& title,
                           const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<SvgSeries>& series);

}  // namespace selectorate::cli
