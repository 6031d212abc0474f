#include "airystef/reciprocal.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "airystef/quadrature.hpp"
#include "airystef/rootfind.hpp"

namespace airystef {
namespace {

void require_inside(const StefanProblem& problem, double x, double t) {
  double S = front(problem, t);
  if (!(x >= 0.0) || !(x <= S * (1.0 + 1e-12))) {
    throw std::domain_error("reciprocal: x = " + std::to_string(x) +
                            " outside [0, S(t)] = [0, " + std::to_string(S) +
                            "]");
  }
}

double x_leg(const StefanProblem& problem, double x, double t, int n_quad) {
  return integrate_nodes(
      [&](double xp) { return eval_u(problem.sol, xp, t); }, 0.0, x, n_quad);
}

double dt_leg_integrand(const StefanProblem& problem, double x, double t) {
  return -flux(problem.sol, x, t);
}

/// Monotone inversion of x -> x*(x, t) on one time slice, walking targets
/// in increasing order so each solve starts from the previous image point.
class XStarSlice {
 public:
  XStarSlice(const StefanProblem& problem, double t)
      : problem_(problem), t_(t), s_(front(problem, t)) {}

  double invert(double x_star_target) {
    if (x_star_target < x_star_prev_ - 1e-12) {
      throw std::logic_error("XStarSlice: targets must be nondecreasing");
    }
    double remaining = x_star_target - x_star_prev_;
    auto f = [&](double x) {
      return integrate_gl16(
                 [&](double xp) { return eval_u(problem_.sol, xp, t_); },
                 x_prev_, x, 1) -
             remaining;
    };
    if (!(f(s_) >= -1e-12)) {
      throw std::domain_error(
          "XStarSlice: target x* beyond the image of [0, S(t)]");
    }
    double x = find_root(f, x_prev_, s_, RootOptions{1e-12, 1e-15, 200});
    x_star_prev_ = x_star_target;
    x_prev_ = x;
    return x;
  }

 private:
  const StefanProblem& problem_;
  double t_;
  double s_;
  double x_prev_ = 0.0;
  double x_star_prev_ = 0.0;
};

}  // namespace

double x_star(const StefanProblem& problem, double x, double t, int n_quad) {
  require_inside(problem, x, t);
  return x_leg(problem, x, t, n_quad);
}

double x_star_time_leg(const StefanProblem& problem, double x, double t0,
                       double t1, int n_quad) {
  return integrate_nodes(
      [&](double t) { return dt_leg_integrand(problem, x, t); }, t0, t1,
      n_quad);
}

std::pair<double, double> x_star_two_routes(const StefanProblem& problem,
                                            double x, double t0, double t1,
                                            int n_quad) {
  require_inside(problem, x, t0);
  require_inside(problem, x, t1);
  double route_xt =
      x_leg(problem, x, t0, n_quad) + x_star_time_leg(problem, x, t0, t1, n_quad);
  double route_tx =
      x_star_time_leg(problem, 0.0, t0, t1, n_quad) + x_leg(problem, x, t1, n_quad);
  return {route_xt, route_tx};
}

ResidualReport compatibility_residual(const StefanProblem& problem,
                                      const GridSpec& grid, int n_quad,
                                      std::optional<double> lambda_override) {
  if (grid.empty()) {
    return {"compatibility", 0, 0.0, 0.0, "finite-difference", "empty"};
  }
  grid.validate();
  if (grid.nx < 8 || grid.nt < 3) {
    throw std::invalid_argument(
        "compatibility_residual: lattice too small for the nested stencils "
        "(need nx >= 8, nt >= 3)");
  }
  if (!(grid.x0 > 0.0)) {
    throw std::domain_error(
        "compatibility_residual: x* lattice must start inside the image "
        "(x0 > 0)");
  }
  double lambda = lambda_override.value_or(problem.sol.params.lambda);
  double a = problem.sol.a;
  int nx = grid.nx, nt = grid.nt;
  double h = (grid.x1 - grid.x0) / (nx - 1);
  double k = (grid.t1 - grid.t0) / (nt - 1);

  // Tabulate w = 1/u* = u on the lattice, slice by slice.
  std::vector<double> w(static_cast<size_t>(nx) * nt);
  for (int j = 0; j < nt; ++j) {
    double t = grid.t(j);
    double image_max = x_star(problem, front(problem, t), t, n_quad);
    if (grid.x1 > image_max) {
      throw std::domain_error(
          "compatibility_residual: x* lattice exceeds the image width " +
          std::to_string(image_max));
    }
    XStarSlice slice(problem, t);
    for (int i = 0; i < nx; ++i) {
      double x = slice.invert(grid.x(i));
      w[static_cast<size_t>(j) * nx + i] = eval_u(problem.sol, x, t);
    }
  }
  auto W = [&](int i, int j) -> double {
    return w[static_cast<size_t>(j) * nx + i];
  };

  double max_abs = 0.0, sum_abs = 0.0;
  int n_points = 0;
  for (int j = 1; j + 1 < nt; ++j) {
    double tau = grid.t(j) + a;
    // Nested first derivatives in x*: A = w * dw/dx*, then the flux
    // B = dA/dx* - (lambda/3) u*^4 (t*+a)^-2, then dB/dx*.
    std::vector<double> A(nx, 0.0), B(nx, 0.0);
    for (int i = 1; i + 1 < nx; ++i) {
      A[i] = W(i, j) * (W(i + 1, j) - W(i - 1, j)) / (2.0 * h);
    }
    for (int i = 2; i + 2 < nx; ++i) {
      double u_star = 1.0 / W(i, j);
      B[i] = (A[i + 1] - A[i - 1]) / (2.0 * h) -
             lambda / 3.0 * u_star * u_star * u_star * u_star / (tau * tau);
    }
    for (int i = 3; i + 3 < nx; ++i) {
      double lhs = (1.0 / W(i, j + 1) - 1.0 / W(i, j - 1)) / (2.0 * k);
      double rhs = (B[i + 1] - B[i - 1]) / (2.0 * h);
      double r = std::fabs(lhs - rhs);
      if (r > max_abs) max_abs = r;
      sum_abs += r;
      ++n_points;
    }
  }

  char notes[160];
  std::snprintf(notes, sizeof(notes),
                "lattice steps hx*=%.3e ht*=%.3e n_quad=%d%s", h, k, n_quad,
                lambda_override ? " (lambda overridden in flux)" : "");
  return {"compatibility", n_points, max_abs,
          n_points > 0 ? sum_abs / n_points : 0.0, "finite-difference",
          notes};
}

SStarCurve s_star_curve(const StefanProblem& problem, int n_quad) {
  PsiValues at_front = psi(problem.sol.params, problem.gamma);
  double coeff = problem.gamma / 3.0 *
                 (at_front.psi - problem.L_m / problem.gamma);
  double direct0 = x_star(problem, problem.S_0, 0.0, n_quad);
  double constant = direct0 - coeff * std::log(problem.sol.a);
  return {coeff, constant, direct0};
}

double s_star(const StefanProblem& problem, double t_star, int n_quad) {
  if (!(t_star >= 0.0)) {
    throw std::domain_error("s_star: t_star must be nonnegative");
  }
  SStarCurve curve = s_star_curve(problem, n_quad);
  return curve.coeff * std::log(t_star + problem.sol.a) + curve.constant;
}

ReciprocalImage build_image(const StefanProblem& problem, const GridSpec& grid,
                            int n_quad) {
  grid.validate();
  ReciprocalImage image;
  image.problem = problem;
  image.x_star_origin = 0.0;
  SStarCurve curve = s_star_curve(problem, n_quad);
  image.s_star_coeff = curve.coeff;
  image.s_star_const = curve.constant;
  image.samples.reserve(static_cast<size_t>(grid.nx) * grid.nt);
  for (int j = 0; j < grid.nt; ++j) {
    double t = grid.t(j);
    for (int i = 0; i < grid.nx; ++i) {
      double x = grid.x(i);
      double xs = x_star(problem, x, t, n_quad);
      image.samples.push_back({x, t, xs, 1.0 / eval_u(problem.sol, x, t)});
    }
  }
  return image;
}

}  // namespace airystef
