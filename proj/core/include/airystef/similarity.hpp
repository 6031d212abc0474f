#pragma once

#include <optional>
#include <string>

#include "airystef/ermakov.hpp"
#include "airystef/grid.hpp"

namespace airystef {

/// Exact solution of
///
///     u_t + u_xxx + lambda (t+a)^mu u^-4 u_x = 0,    mu = -2,
///
/// built from the similarity ansatz u = (t+a)^m Psi(x/(t+a)^n) with the
/// forced exponents m = -1/3, n = 1/3.
struct SimilaritySolution {
  ErmakovParams params;
  double a;
  double m = -1.0 / 3.0;
  double n = 1.0 / 3.0;
  double mu = -2.0;
};

SimilaritySolution make_solution(const ErmakovParams& params, double a);

/// u(x, t) = (t+a)^(-1/3) Psi(x/(t+a)^(1/3)); strictly positive.
double eval_u(const SimilaritySolution& sol, double x, double t);

/// u and its derivatives, all via the chain rule through Psi, Psi', Psi''
/// and the reduced ODE (which supplies Psi''' without a third-derivative
/// superposition formula).
struct UDerivs {
  double u;
  double u_x;
  double u_xx;
  double u_xxx;
  double u_t;
};

UDerivs eval_derivs(const SimilaritySolution& sol, double x, double t);

/// Conservation-law flux F = u_xx - (lambda/3)(t+a)^-2 u^-3 and its exact
/// x-derivative; on solutions, flux_x = -u_t pointwise.
double flux(const SimilaritySolution& sol, double x, double t);
double flux_x(const SimilaritySolution& sol, double x, double t);

struct PdeResidualOptions {
  double hx = 1e-3;  // spatial step of the verification stencils
  double ht = 1e-3;  // temporal step
  // Evaluates the equation with a different lambda than the one the
  // solution was built with (sensitivity control; the residual must then
  // rise in proportion to the mismatch).
  std::optional<double> lambda_override;
};

struct PdeResiduals {
  ResidualReport analytic;
  ResidualReport finite_difference;
};

/// Residual of the governing equation over the grid, measured two ways:
/// analytically via eval_derivs, and by 2nd-order central finite
/// differences of eval_u (5-point stencil for u_xxx).
PdeResiduals pde_residual(const SimilaritySolution& sol, const GridSpec& grid,
                          const PdeResidualOptions& opt = {});

/// The linear system that forces the ansatz exponents, solved and
/// back-substituted.  residual1..3 are the three exponent expressions
/// evaluated at the solution (all zero).
struct ExponentForcing {
  double m;
  double n;
  double mu;
  double det;
  double residual1;
  double residual2;
  double residual3;
  std::string table;
};

ExponentForcing exponent_forcing_check();

}  // namespace airystef
