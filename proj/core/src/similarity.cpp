#include "airystef/similarity.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace airystef {
namespace {

// Evaluation without the t >= 0 gate, for finite-difference stencils that
// reach slightly below the physical time window; only t + a > 0 is needed.
double eval_u_unchecked(const SimilaritySolution& sol, double x, double t) {
  double tau = t + sol.a;
  if (!(tau > 0.0)) {
    throw std::domain_error("eval_u: t + a must be positive");
  }
  double scale = std::cbrt(tau);
  return psi(sol.params, x / scale).psi / scale;
}

struct Accumulator {
  double max_abs = 0.0;
  double sum_abs = 0.0;
  double max_rel = 0.0;
  double sum_rel = 0.0;
  int n = 0;

  void add(double residual, double magnitude) {
    double r = std::fabs(residual);
    double rel = r / magnitude;
    if (r > max_abs) max_abs = r;
    if (rel > max_rel) max_rel = rel;
    sum_abs += r;
    sum_rel += rel;
    ++n;
  }
};

std::string relative_note(const Accumulator& acc, const char* extra) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "max_rel=%.3e mean_rel=%.3e%s", acc.max_rel,
                acc.n > 0 ? acc.sum_rel / acc.n : 0.0, extra);
  return buf;
}

ResidualReport empty_report(const char* method) {
  return {"pde", 0, 0.0, 0.0, method, "empty"};
}

}  // namespace

SimilaritySolution make_solution(const ErmakovParams& params, double a) {
  if (!(a > 0.0)) {
    throw std::domain_error("make_solution: a must be positive");
  }
  SimilaritySolution sol;
  sol.params = params;
  sol.a = a;
  return sol;
}

double eval_u(const SimilaritySolution& sol, double x, double t) {
  if (!(t >= 0.0)) {
    throw std::domain_error("eval_u: t must be nonnegative");
  }
  return eval_u_unchecked(sol, x, t);
}

UDerivs eval_derivs(const SimilaritySolution& sol, double x, double t) {
  double tau = t + sol.a;
  if (!(tau > 0.0)) {
    throw std::domain_error("eval_derivs: t + a must be positive");
  }
  double s = std::cbrt(tau);  // tau^(1/3)
  double xi = x / s;
  PsiValues p = psi(sol.params, xi);
  double lambda = sol.params.lambda;
  // Third derivative from the once-integrated reduced equation:
  // Psi''' = (1/3)(Psi + xi Psi') - lambda Psi^-4 Psi'.
  double d3psi = (p.psi + xi * p.dpsi) / 3.0 -
                 lambda * p.dpsi / (p.psi * p.psi * p.psi * p.psi);

  UDerivs d;
  d.u = p.psi / s;
  d.u_x = p.dpsi / (s * s);
  d.u_xx = p.d2psi / tau;
  d.u_xxx = d3psi / (s * s * s * s);
  d.u_t = -(p.psi + xi * p.dpsi) / (3.0 * s * s * s * s);
  return d;
}

double flux(const SimilaritySolution& sol, double x, double t) {
  UDerivs d = eval_derivs(sol, x, t);
  double tau = t + sol.a;
  return d.u_xx -
         sol.params.lambda / (3.0 * tau * tau * d.u * d.u * d.u);
}

double flux_x(const SimilaritySolution& sol, double x, double t) {
  UDerivs d = eval_derivs(sol, x, t);
  double tau = t + sol.a;
  return d.u_xxx +
         sol.params.lambda * d.u_x / (tau * tau * d.u * d.u * d.u * d.u);
}

PdeResiduals pde_residual(const SimilaritySolution& sol, const GridSpec& grid,
                          const PdeResidualOptions& opt) {
  if (grid.empty()) {
    return {empty_report("analytic"), empty_report("finite-difference")};
  }
  grid.validate();
  if (grid.x0 < 0.0 || grid.t0 < 0.0) {
    throw std::domain_error("pde_residual: grid must lie in x >= 0, t >= 0");
  }
  double lambda_eq = opt.lambda_override.value_or(sol.params.lambda);

  Accumulator analytic;
  Accumulator fd;
  for (int j = 0; j < grid.nt; ++j) {
    double t = grid.t(j);
    double tau = t + sol.a;
    double tau2 = tau * tau;
    for (int i = 0; i < grid.nx; ++i) {
      double x = grid.x(i);
      UDerivs d = eval_derivs(sol, x, t);
      double nonlinear = lambda_eq / tau2 * d.u_x /
                         (d.u * d.u * d.u * d.u);
      double magnitude =
          std::fabs(d.u_t) + std::fabs(d.u_xxx) + std::fabs(nonlinear);
      analytic.add(d.u_t + d.u_xxx + nonlinear, magnitude);

      double hx = opt.hx, ht = opt.ht;
      auto U = [&](double xx, double tt) {
        return eval_u_unchecked(sol, xx, tt);
      };
      double u0 = U(x, t);
      double ut = (U(x, t + ht) - U(x, t - ht)) / (2.0 * ht);
      double up1 = U(x + hx, t), um1 = U(x - hx, t);
      double up2 = U(x + 2.0 * hx, t), um2 = U(x - 2.0 * hx, t);
      double ux = (up1 - um1) / (2.0 * hx);
      double uxxx = (up2 - 2.0 * up1 + 2.0 * um1 - um2) /
                    (2.0 * hx * hx * hx);
      double nl = lambda_eq / tau2 * ux / (u0 * u0 * u0 * u0);
      fd.add(ut + uxxx + nl,
             std::fabs(ut) + std::fabs(uxxx) + std::fabs(nl));
    }
  }

  PdeResiduals out;
  out.analytic = {"pde", analytic.n, analytic.max_abs,
                  analytic.sum_abs / analytic.n, "analytic",
                  relative_note(analytic, "")};
  char steps[64];
  std::snprintf(steps, sizeof(steps), " hx=%.3e ht=%.3e", opt.hx, opt.ht);
  out.finite_difference = {"pde", fd.n, fd.max_abs, fd.sum_abs / fd.n,
                           "finite-difference", relative_note(fd, steps)};
  return out;
}

ExponentForcing exponent_forcing_check() {
  // Inserting u = (t+a)^m Psi(xi), xi = x (t+a)^-n, and dividing by the
  // common (t+a)^(m-1) factor leaves
  //   [m Psi - n xi Psi'] + (t+a)^(-3n+1) Psi'''
  //                       + lambda (t+a)^(mu-4m-n+1) Psi^-4 Psi' = 0.
  // Removing all explicit time dependence and making the bracket a perfect
  // derivative (so the equation integrates once) gives three linear
  // conditions on (m, n, mu):
  //   -3n + 1 = 0
  //   mu - 4m - n + 1 = 0
  //   m + n = 0          (then m Psi - n xi Psi' = -(1/3)(xi Psi)')
  double A[3][4] = {
      {0.0, -3.0, 0.0, -1.0},
      {-4.0, -1.0, 1.0, -1.0},
      {1.0, 1.0, 0.0, 0.0},
  };

  // Gaussian elimination with partial pivoting on the 3x4 tableau.
  double det = 1.0;
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::fabs(A[r][col]) > std::fabs(A[pivot][col])) pivot = r;
    }
    if (pivot != col) {
      for (int c = 0; c < 4; ++c) std::swap(A[col][c], A[pivot][c]);
      det = -det;
    }
    det *= A[col][col];
    for (int r = 0; r < 3; ++r) {
      if (r == col || A[col][col] == 0.0) continue;
      double factor = A[r][col] / A[col][col];
      for (int c = col; c < 4; ++c) A[r][c] -= factor * A[col][c];
    }
  }

  ExponentForcing result;
  result.m = A[0][3] / A[0][0];
  result.n = A[1][3] / A[1][1];
  result.mu = A[2][3] / A[2][2];
  result.det = det;
  result.residual1 = -3.0 * result.n + 1.0;
  result.residual2 = result.mu - 4.0 * result.m - result.n + 1.0;
  result.residual3 = result.m + result.n;

  char buf[640];
  std::snprintf(
      buf, sizeof(buf),
      "exponent forcing for u = (t+a)^m Psi(x (t+a)^-n):\n"
      "  condition 1: -3n + 1 = 0          (third-derivative term)\n"
      "  condition 2: mu - 4m - n + 1 = 0  (nonlinear term)\n"
      "  condition 3: m + n = 0            (time-derivative bracket "
      "integrates to -(1/3)(xi Psi)')\n"
      "  determinant: %g (unique solution)\n"
      "  solution: m = %.17g, n = %.17g, mu = %.17g\n"
      "  back-substituted exponents: (%g, %g, %g)\n",
      result.det, result.m, result.n, result.mu, result.residual1,
      result.residual2, result.residual3);
  result.table = buf;
  return result;
}

}  // namespace airystef
