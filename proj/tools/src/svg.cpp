#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace airystef::cli {
namespace {

constexpr double kWidth = 800.0, kHeight = 560.0;
constexpr double kLeft = 70.0, kRight = 30.0, kTop = 40.0, kBottom = 55.0;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                           "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void widen() {
    if (!(hi > lo)) {
      lo -= 0.5;
      hi += 0.5;
    }
    double pad = 0.04 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
  [[nodiscard]] double frac(double v) const { return (v - lo) / (hi - lo); }
};

std::string header() {
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n"
                "<rect width=\"%.0f\" height=\"%.0f\" fill=\"white\"/>\n",
                kWidth, kHeight, kWidth, kHeight, kWidth, kHeight);
  return buf;
}

std::string text(double x, double y, const std::string& s,
                 const std::string& anchor = "middle", double size = 13.0,
                 const std::string& extra = "") {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                "font-size=\"%.0f\" text-anchor=\"%s\"%s>",
                x, y, size, anchor.c_str(), extra.c_str());
  return buf + s + "</text>\n";
}

std::string axes(const Range& rx, const Range& ry, const AxisLabels& labels) {
  std::string out;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                "fill=\"none\" stroke=\"#333\"/>\n",
                kLeft, kTop, kPlotW, kPlotH);
  out += buf;
  for (int k = 0; k <= 5; ++k) {
    double f = k / 5.0;
    double px = kLeft + f * kPlotW;
    double py = kTop + (1.0 - f) * kPlotH;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                  "stroke=\"#ccc\" stroke-dasharray=\"3,4\"/>\n",
                  px, kTop, px, kTop + kPlotH);
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                  "stroke=\"#ccc\" stroke-dasharray=\"3,4\"/>\n",
                  kLeft, py, kLeft + kPlotW, py);
    out += buf;
    out += text(px, kTop + kPlotH + 18.0, fmt(rx.lo + f * (rx.hi - rx.lo)));
    out += text(kLeft - 8.0, py + 4.0, fmt(ry.lo + f * (ry.hi - ry.lo)),
                "end", 12.0);
  }
  out += text(kLeft + kPlotW / 2.0, kHeight - 12.0, labels.x);
  out += text(18.0, kTop + kPlotH / 2.0, labels.y, "middle", 13.0,
              " transform=\"rotate(-90 18 " +
                  fmt(kTop + kPlotH / 2.0) + ")\"");
  out += text(kLeft + kPlotW / 2.0, 24.0, labels.title, "middle", 15.0);
  return out;
}

}  // namespace

std::string render_lines(const std::vector<Series>& series,
                         const AxisLabels& labels) {
  Range rx, ry;
  for (const Series& s : series) {
    for (double v : s.x) rx.add(v);
    for (double v : s.y) ry.add(v);
  }
  rx.widen();
  ry.widen();

  std::string out = header() + axes(rx, ry, labels);
  char buf[200];
  for (size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    const char* color = kPalette[k % 8];
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < s.x.size(); ++i) {
      double px = kLeft + rx.frac(s.x[i]) * kPlotW;
      double py = kTop + (1.0 - ry.frac(s.y[i])) * kPlotH;
      std::snprintf(buf, sizeof(buf), "%.1f,%.1f ", px, py);
      out += buf;
    }
    out += "\"/>\n";
    double ly = kTop + 16.0 + 16.0 * static_cast<double>(k);
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                  "stroke=\"%s\" stroke-width=\"2\"/>\n",
                  kLeft + kPlotW - 120.0, ly, kLeft + kPlotW - 98.0, ly,
                  color);
    out += buf;
    out += text(kLeft + kPlotW - 92.0, ly + 4.0, s.label, "start", 12.0);
  }
  return out + "</svg>\n";
}

std::string render_heatmap(const std::vector<double>& xs,
                           const std::vector<double>& ts,
                           const std::vector<double>& values,
                           const AxisLabels& labels) {
  Range rx, rt;
  for (double v : xs) rx.add(v);
  for (double v : ts) rt.add(v);
  rx.widen();
  rt.widen();
  double vmax = 0.0;
  for (double v : values) vmax = std::max(vmax, std::fabs(v));
  if (vmax == 0.0) vmax = 1.0;

  std::string out = header();
  size_t nx = xs.size(), nt = ts.size();
  double cw = kPlotW / static_cast<double>(nx);
  double ch = kPlotH / static_cast<double>(nt);
  char buf[200];
  for (size_t j = 0; j < nt; ++j) {
    for (size_t i = 0; i < nx; ++i) {
      double f = std::fabs(values[j * nx + i]) / vmax;
      int r = static_cast<int>(255.0 - f * (255.0 - 31.0));
      int g = static_cast<int>(255.0 - f * (255.0 - 119.0));
      int b = static_cast<int>(255.0 - f * (255.0 - 180.0));
      double px = kLeft + rx.frac(xs[i]) * kPlotW - cw / 2.0;
      double py = kTop + (1.0 - rt.frac(ts[j])) * kPlotH - ch / 2.0;
      std::snprintf(buf, sizeof(buf),
                    "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.2f\" "
                    "height=\"%.2f\" fill=\"rgb(%d,%d,%d)\"/>\n",
                    px, py, cw + 0.5, ch + 0.5, r, g, b);
      out += buf;
    }
  }
  out += axes(rx, rt, labels);
  out += text(kLeft + kPlotW - 8.0, kTop + kPlotH - 10.0,
              "max |value| = " + fmt(vmax), "end", 12.0);
  return out + "</svg>\n";
}

}  // namespace airystef::cli
