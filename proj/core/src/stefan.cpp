#include "airystef/stefan.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "airystef/rootfind.hpp"

namespace airystef {
namespace {

void require_time(double t) {
  if (!(t >= 0.0)) {
    throw std::domain_error("stefan: t must be nonnegative");
  }
}

}  // namespace

double front(const StefanProblem& problem, double t) {
  require_time(t);
  return problem.gamma * std::cbrt(t + problem.sol.a);
}

double front_speed(const StefanProblem& problem, double t) {
  require_time(t);
  double tau = t + problem.sol.a;
  return problem.gamma / (3.0 * std::cbrt(tau) * std::cbrt(tau));
}

StefanProblem forward_solve(const SimilaritySolution& sol, double gamma) {
  if (!(gamma >= kMinGamma)) {
    throw std::domain_error("forward_solve: gamma must be >= " +
                            std::to_string(kMinGamma) +
                            " (front degenerates as gamma -> 0)");
  }
  double lambda = sol.params.lambda;
  PsiValues at_front = psi(sol.params, gamma);
  PsiValues at_origin = psi(sol.params, 0.0);

  StefanProblem p;
  p.sol = sol;
  p.gamma = gamma;
  p.L_m = 3.0 * (at_front.d2psi -
                 lambda / (3.0 * at_front.psi * at_front.psi * at_front.psi));
  p.P_m = gamma * at_front.psi;
  p.H_0 = at_origin.d2psi -
          lambda / (3.0 * at_origin.psi * at_origin.psi * at_origin.psi);
  p.S_0 = gamma * std::cbrt(sol.a);

  if (std::fabs(p.L_m - p.P_m) > 1e-10 * std::fabs(p.P_m)) {
    throw std::logic_error(
        "forward_solve: internal consistency violated: L_m = " +
        std::to_string(p.L_m) + " != P_m = " + std::to_string(p.P_m));
  }
  if (std::fabs(p.H_0) > 1e-10) {
    throw std::logic_error(
        "forward_solve: internal consistency violated: H_0 = " +
        std::to_string(p.H_0) + " != 0");
  }
  return p;
}

double inverse_solve(const SimilaritySolution& sol, double P_m_target,
                     std::pair<double, double> bracket) {
  if (!(bracket.first >= kMinGamma) || !(bracket.second > bracket.first)) {
    throw std::domain_error(
        "inverse_solve: bracket must satisfy " + std::to_string(kMinGamma) +
        " <= lo < hi");
  }
  auto g = [&sol, P_m_target](double gamma) {
    return gamma * psi(sol.params, gamma).psi - P_m_target;
  };
  return find_root(g, bracket.first, bracket.second,
                   RootOptions{1e-12, 1e-15, 200});
}

std::vector<ResidualReport> boundary_residuals(
    const StefanProblem& problem, const std::vector<double>& times) {
  const char* names[3] = {"boundary-I", "boundary-II", "boundary-III"};
  std::vector<ResidualReport> reports(3);
  for (int c = 0; c < 3; ++c) {
    reports[c] = {names[c], 0, 0.0, 0.0, "analytic",
                  times.empty() ? "empty" : ""};
  }
  if (times.empty()) return reports;

  double lambda = problem.sol.params.lambda;
  double sums[3] = {0.0, 0.0, 0.0};
  for (double t : times) {
    require_time(t);
    double tau = t + problem.sol.a;
    double S = front(problem, t);
    double Sdot = front_speed(problem, t);

    UDerivs at_front = eval_derivs(problem.sol, S, t);
    UDerivs at_origin = eval_derivs(problem.sol, 0.0, t);
    double lhs1 = at_front.u_xx -
                  lambda / (3.0 * tau * tau * at_front.u * at_front.u *
                            at_front.u);
    double lhs3 = at_origin.u_xx -
                  lambda / (3.0 * tau * tau * at_origin.u * at_origin.u *
                            at_origin.u);

    double r[3];
    r[0] = lhs1 - problem.L_m * std::pow(S, problem.i) * Sdot;
    r[1] = at_front.u - problem.P_m * std::pow(S, problem.j);
    r[2] = lhs3 - problem.H_0 * std::pow(tau, problem.k);
    for (int c = 0; c < 3; ++c) {
      double abs_r = std::fabs(r[c]);
      if (abs_r > reports[c].max_abs) reports[c].max_abs = abs_r;
      sums[c] += abs_r;
      ++reports[c].n_points;
    }
  }
  for (int c = 0; c < 3; ++c) {
    reports[c].mean_abs = sums[c] / reports[c].n_points;
  }
  return reports;
}

}  // namespace airystef
