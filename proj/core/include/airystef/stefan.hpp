#pragma once

#include <utility>
#include <vector>

#include "airystef/grid.hpp"
#include "airystef/similarity.hpp"

namespace airystef {

/// Moving boundary problem for the governing equation on 0 < x < S(t):
///
///   (I)   u_xx(S(t),t) - (lambda/3)(t+a)^-2 u^-3(S(t),t) = L_m S^i Sdot
///   (II)  u(S(t),t) = P_m S^j
///   (III) u_xx(0,t)  - (lambda/3)(t+a)^-2 u^-3(0,t)      = H_0 (t+a)^k
///
/// with S(t) = gamma (t+a)^(1/3).  The similarity form forces
/// i = j = k = -1 and, on exact instances, L_m = P_m = gamma*Psi(gamma)
/// and H_0 = 0.
struct StefanProblem {
  SimilaritySolution sol;
  double gamma;
  double L_m;
  double P_m;
  double H_0;
  double i = -1.0;
  double j = -1.0;
  double k = -1.0;
  double S_0;  // = gamma * a^(1/3)
};

inline constexpr double kMinGamma = 1e-6;

/// S(t) and its time derivative.
double front(const StefanProblem& problem, double t);
double front_speed(const StefanProblem& problem, double t);

/// Determines the boundary constants from gamma by evaluating Psi at the
/// front and at the origin, then cross-checks the forced relations
/// |L_m - P_m|/|P_m| < 1e-10 and |H_0| < 1e-10 (their failure indicates an
/// upstream defect, reported as std::logic_error).
StefanProblem forward_solve(const SimilaritySolution& sol, double gamma);

/// Recovers gamma from a target P_m by a safeguarded bracketed root-find on
/// g(gamma) = gamma*Psi(gamma) - P_m_target; |g| < 1e-12 at the returned
/// point.  Throws std::invalid_argument when the bracket shows no sign
/// change (message carries both endpoint values).
double inverse_solve(const SimilaritySolution& sol, double P_m_target,
                     std::pair<double, double> bracket);

/// Residuals of conditions (I)-(III), evaluated on u at the given times
/// with the constants stored in `problem`; one report per condition.
std::vector<ResidualReport> boundary_residuals(const StefanProblem& problem,
                                               const std::vector<double>& times);

}  // namespace airystef
