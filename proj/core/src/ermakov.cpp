#include "airystef/ermakov.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "airystef/airy.hpp"

namespace airystef {
namespace {

constexpr double kPi = 3.14159265358979323846;

// sigma = -2^(-1/3), the unique real scale with sigma^3 = -1/2, so that
// Omega(z) = Ai(sigma z) solves Omega_zz + (z/2)Omega = 0.
const double kSigma = -std::cbrt(0.5);
// epsilon = -(3/2)^(1/3), the real root of epsilon^3 = -3/2.
const double kEpsilon = -std::cbrt(1.5);

}  // namespace

ErmakovParams make_params(double lambda, double c1, double c2) {
  if (!(lambda > 0.0)) {
    throw std::domain_error(
        "make_params: lambda must be positive (lambda = " +
        std::to_string(lambda) +
        " leaves the positivity regime, where Psi^4 could vanish)");
  }
  if (!(c1 > 0.0)) {
    throw std::domain_error("make_params: c1 must be positive");
  }
  ErmakovParams p{};
  p.lambda = lambda;
  p.c1 = c1;
  p.c2 = c2;
  p.epsilon = kEpsilon;
  p.sigma = kSigma;
  p.kstar = p.epsilon * p.epsilon * lambda / 3.0;
  p.wronskian = p.sigma / kPi;
  p.c3 = (c2 * c2 + p.kstar / (p.wronskian * p.wronskian)) / c1;
  return p;
}

OmegaBasis omega_basis(double z) {
  AiryValues v = airy_scaled(z, kSigma);
  return {v.ai, v.bi, v.aip, v.bip};
}

PsiValues psi(const ErmakovParams& params, double xi) {
  double z = xi / params.epsilon;
  AiryValues v = airy_scaled(z, params.sigma);
  double w1 = v.ai, w2 = v.bi;
  double dw1 = v.aip, dw2 = v.bip;
  double ddw1 = -(z / 2.0) * w1;
  double ddw2 = -(z / 2.0) * w2;

  double q = params.c1 * w1 * w1 + 2.0 * params.c2 * w1 * w2 +
             params.c3 * w2 * w2;
  if (!(q > 0.0)) {
    throw std::logic_error(
        "psi: quadratic form is not positive at z = " + std::to_string(z) +
        " (broken invariant: parameters must keep Psi > 0)");
  }
  double dq = 2.0 * (params.c1 * w1 * dw1 +
                     params.c2 * (dw1 * w2 + w1 * dw2) +
                     params.c3 * w2 * dw2);
  double ddq = 2.0 * (params.c1 * (dw1 * dw1 + w1 * ddw1) +
                      params.c2 * (ddw1 * w2 + 2.0 * dw1 * dw2 + w1 * ddw2) +
                      params.c3 * (dw2 * dw2 + w2 * ddw2));

  double p = std::sqrt(q);
  double dp_dz = dq / (2.0 * p);
  double d2p_dz2 = (ddq - 2.0 * dp_dz * dp_dz) / (2.0 * p);
  return {p, dp_dz / params.epsilon,
          d2p_dz2 / (params.epsilon * params.epsilon)};
}

double integrate_oracle(const ErmakovParams& params, double xi0, double xi1,
                        int n_steps) {
  if (n_steps < 100) {
    throw std::invalid_argument("integrate_oracle: n_steps must be >= 100");
  }
  if (xi0 == xi1) return 0.0;

  // Integrate in the z variable, where the equation reads
  //   y0' = y1,   y1' = -(z/2) y0 + kstar y0^-3.
  double z0 = xi0 / params.epsilon;
  double z1 = xi1 / params.epsilon;
  PsiValues initial = psi(params, xi0);
  double y0 = initial.psi;
  double y1 = initial.dpsi * params.epsilon;  // d/dz = epsilon * d/dxi

  auto rhs = [&params](double z, double w0, double w1, double& f0,
                       double& f1) {
    f0 = w1;
    f1 = -(z / 2.0) * w0 + params.kstar / (w0 * w0 * w0);
  };

  double h = (z1 - z0) / n_steps;
  double max_dev = 0.0;
  for (int step = 0; step < n_steps; ++step) {
    double z = z0 + step * h;
    double k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b;
    rhs(z, y0, y1, k1a, k1b);
    rhs(z + 0.5 * h, y0 + 0.5 * h * k1a, y1 + 0.5 * h * k1b, k2a, k2b);
    rhs(z + 0.5 * h, y0 + 0.5 * h * k2a, y1 + 0.5 * h * k2b, k3a, k3b);
    rhs(z + h, y0 + h * k3a, y1 + h * k3b, k4a, k4b);
    y0 += h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
    y1 += h / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
    if (!std::isfinite(y0) || !std::isfinite(y1)) {
      throw std::runtime_error(
          "integrate_oracle: non-finite state at z = " +
          std::to_string(z + h));
    }
    double dev = std::fabs(y0 - psi(params, (z + h) * params.epsilon).psi);
    if (dev > max_dev) max_dev = dev;
  }
  return max_dev;
}

}  // namespace airystef
