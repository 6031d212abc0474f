#pragma once

namespace airystef {

/// Parameters of the Ermakov-Pinney superposition
///
///     Psi(xi) = sqrt(c1*Omega1^2 + 2*c2*Omega1*Omega2 + c3*Omega2^2),
///
/// where Omega1(z) = Ai(sigma*z), Omega2(z) = Bi(sigma*z) solve the
/// auxiliary equation Omega_zz + (z/2)*Omega = 0 (sigma^3 = -1/2) and
/// xi = epsilon*z with epsilon^3 = -3/2.  The constants satisfy
///
///     c1*c3 - c2^2 = kstar / wronskian^2,      kstar = epsilon^2*lambda/3,
///
/// which makes Psi solve  Psi_zz + (z/2)*Psi = kstar*Psi^-3,  equivalently
/// Psi''(xi) = (xi/3)*Psi + (lambda/3)*Psi^-3.
struct ErmakovParams {
  double lambda;
  double c1;
  double c2;
  double c3;
  double kstar;
  double epsilon;
  double sigma;
  double wronskian;  // of the scaled basis: sigma/pi
};

/// Basis pair and z-derivatives: Omega1 = Ai(sigma z), Omega2 = Bi(sigma z).
struct OmegaBasis {
  double omega1;
  double omega2;
  double d_omega1;
  double d_omega2;
};

/// Psi and its first two derivatives with respect to xi.
struct PsiValues {
  double psi;
  double dpsi;
  double d2psi;
};

/// Fills in the dependent constants from (lambda, c1, c2), solving the
/// Wronskian constraint for c3.  Requires lambda > 0 and c1 > 0 so the
/// quadratic form is positive definite and Psi > 0 everywhere.
ErmakovParams make_params(double lambda, double c1, double c2);

OmegaBasis omega_basis(double z);

PsiValues psi(const ErmakovParams& params, double xi);

/// Independent check: integrates Psi_zz + (z/2)Psi = kstar*Psi^-3 with a
/// classical fixed-step 4th-order Runge-Kutta scheme from initial data
/// psi(params, xi0) and returns the maximum absolute deviation from the
/// closed form over [xi0, xi1].  Requires n_steps >= 100 (global error
/// scales as h^4, so halving the step shrinks the deviation ~16x).
double integrate_oracle(const ErmakovParams& params, double xi0, double xi1,
                        int n_steps);

}  // namespace airystef
