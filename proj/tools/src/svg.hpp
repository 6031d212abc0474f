#pragma once

#include <string>
#include <vector>

namespace airystef::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct AxisLabels {
  std::string title;
  std::string x;
  std::string y;
};

/// Multi-series line chart (one polyline per series, legend top-right).
std::string render_lines(const std::vector<Series>& series,
                         const AxisLabels& labels);

/// Cell-shaded lattice: values[j*nx + i] at (xs[i], ts[j]), colored from
/// white (0) to dark blue (max |value|).
std::string render_heatmap(const std::vector<double>& xs,
                           const std::vector<double>& ts,
                           const std::vector<double>& values,
                           const AxisLabels& labels);

}  // namespace airystef::cli
