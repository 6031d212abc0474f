#pragma once

#include <stdexcept>
#include <string>

namespace airystef {

/// Rectangular evaluation lattice: nx points spanning [x0, x1] crossed with
/// nt points spanning [t0, t1].  nx or nt <= 0 denotes an empty grid, which
/// residual evaluators accept and report as such.
struct GridSpec {
  double x0 = 0.0;
  double x1 = 1.0;
  double t0 = 0.0;
  double t1 = 1.0;
  int nx = 2;
  int nt = 2;

  [[nodiscard]] bool empty() const { return nx <= 0 || nt <= 0; }

  [[nodiscard]] double x(int i) const {
    return nx == 1 ? x0 : x0 + (x1 - x0) * i / (nx - 1);
  }
  [[nodiscard]] double t(int j) const {
    return nt == 1 ? t0 : t0 + (t1 - t0) * j / (nt - 1);
  }

  void validate() const {
    if (!(x0 < x1) || !(t0 < t1) || nx < 2 || nt < 2) {
      throw std::invalid_argument(
          "GridSpec: require x0 < x1, t0 < t1, nx >= 2, nt >= 2");
    }
  }
};

/// Max/mean absolute defect of a named identity over a sampled grid.
struct ResidualReport {
  std::string identity_name;
  int n_points = 0;
  double max_abs = 0.0;
  double mean_abs = 0.0;
  std::string method;  // "analytic" or "finite-difference"
  std::string notes;
};

}  // namespace airystef
