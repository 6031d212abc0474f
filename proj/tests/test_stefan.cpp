#include "airystef/stefan.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "airystef/ermakov.hpp"
#include "doctest.h"

using namespace airystef;

namespace {

SimilaritySolution reference_solution() {
  return make_solution(make_params(1.0, 1.0, 0.0), 1.0);
}

std::vector<double> sample_times(int n, double t_max) {
  std::vector<double> times(n);
  for (int i = 0; i < n; ++i) times[i] = t_max * i / (n - 1);
  return times;
}

// g(gamma) = gamma*Psi(gamma) - target, as used by the inverse map.
double front_gap(const SimilaritySolution& sol, double gamma, double target) {
  return gamma * psi(sol.params, gamma).psi - target;
}

// Widens a bracket around gamma0 until the inverse map's function changes
// sign across it.
std::pair<double, double> widen_bracket(const SimilaritySolution& sol,
                                        double gamma0, double target) {
  double lo = std::max(kMinGamma, 0.9 * gamma0);
  double hi = 1.1 * gamma0;
  for (int k = 0;
       k < 60 && front_gap(sol, lo, target) * front_gap(sol, hi, target) > 0.0;
       ++k) {
    lo = std::max(kMinGamma, 0.9 * lo);
    hi *= 1.1;
  }
  return {lo, hi};
}

}  // namespace

TEST_CASE("front trajectory") {
  StefanProblem p = forward_solve(reference_solution(), 2.0);

  CHECK(front(p, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(front(p, 7.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(front_speed(p, 0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(front_speed(p, 7.0) == doctest::Approx(2.0 / 12.0).epsilon(1e-15));
  CHECK(p.S_0 == front(p, 0.0));

  SUBCASE("speed is the time derivative of the front") {
    double h = 1e-5;
    for (double t : {0.5, 3.0, 9.0}) {
      double fd = (front(p, t + h) - front(p, t - h)) / (2.0 * h);
      CAPTURE(t);
      CHECK(std::fabs(fd - front_speed(p, t)) < 1e-9);
    }
  }

  SUBCASE("negative time is rejected") {
    CHECK_THROWS_AS(front(p, -1.0), std::domain_error);
    CHECK_THROWS_AS(front_speed(p, -0.1), std::domain_error);
  }
}

TEST_CASE("forward_solve determines consistent constants") {
  SimilaritySolution sol = reference_solution();
  StefanProblem p = forward_solve(sol, 1.0);

  CHECK(p.i == -1.0);
  CHECK(p.j == -1.0);
  CHECK(p.k == -1.0);
  CHECK(p.L_m == doctest::Approx(p.P_m).epsilon(1e-12));
  CHECK(p.P_m == doctest::Approx(psi(sol.params, 1.0).psi).epsilon(1e-14));
  CHECK(std::fabs(p.H_0) < 1e-12);
  CHECK(p.S_0 == doctest::Approx(1.0).epsilon(1e-15));

  SUBCASE("gamma below the positivity floor is rejected") {
    CHECK_THROWS_AS(forward_solve(sol, 1e-7), std::domain_error);
    CHECK_THROWS_AS(forward_solve(sol, 0.0), std::domain_error);
    CHECK_THROWS_AS(forward_solve(sol, -1.0), std::domain_error);
  }
}

TEST_CASE("boundary residuals vanish on exact instances") {
  StefanProblem p = forward_solve(reference_solution(), 1.0);
  std::vector<double> times = sample_times(20, 10.0);
  std::vector<ResidualReport> reports = boundary_residuals(p, times);

  REQUIRE(reports.size() == 3);
  CHECK(reports[0].identity_name == "boundary-I");
  CHECK(reports[1].identity_name == "boundary-II");
  CHECK(reports[2].identity_name == "boundary-III");
  for (const ResidualReport& r : reports) {
    CAPTURE(r.identity_name);
    CHECK(r.n_points == 20);
    CHECK(r.max_abs < 1e-9);
    CHECK(r.method == "analytic");
  }

  SUBCASE("empty time list short-circuits") {
    std::vector<ResidualReport> empty = boundary_residuals(p, {});
    for (const ResidualReport& r : empty) {
      CHECK(r.n_points == 0);
      CHECK(r.notes == "empty");
    }
  }
}

TEST_CASE("boundary residuals detect perturbed constants") {
  SimilaritySolution sol = reference_solution();
  std::vector<double> times = sample_times(20, 10.0);
  double delta = 1e-3;

  SUBCASE("latent-heat constant") {
    StefanProblem p = forward_solve(sol, 1.0);
    p.L_m += delta;
    double max_abs = boundary_residuals(p, times)[0].max_abs;
    // residual grows by delta * S^-1 * Sdot = delta / (3 tau), worst at t=0
    CHECK(max_abs == doctest::Approx(delta / 3.0).epsilon(1e-5));
  }

  SUBCASE("front-value constant") {
    StefanProblem p = forward_solve(sol, 1.0);
    p.P_m += delta;
    double max_abs = boundary_residuals(p, times)[1].max_abs;
    CHECK(max_abs == doctest::Approx(delta / p.S_0).epsilon(1e-5));
  }

  SUBCASE("origin-flux constant") {
    StefanProblem p = forward_solve(sol, 1.0);
    p.H_0 += delta;
    double max_abs = boundary_residuals(p, times)[2].max_abs;
    CHECK(max_abs == doctest::Approx(delta / sol.a).epsilon(1e-5));
  }
}

TEST_CASE("randomized forward/inverse round trip") {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> lambda(0.3, 3.0);
  std::uniform_real_distribution<double> c1(0.5, 2.0);
  std::uniform_real_distribution<double> c2(-0.5, 0.5);
  std::uniform_real_distribution<double> gamma(0.5, 2.0);
  std::vector<double> times = {0.0, 0.7, 4.2};

  for (int draw = 0; draw < 100; ++draw) {
    SimilaritySolution sol =
        make_solution(make_params(lambda(rng), c1(rng), c2(rng)), 1.0);
    double gamma0 = gamma(rng);
    StefanProblem p = forward_solve(sol, gamma0);
    CAPTURE(draw);
    CAPTURE(sol.params.lambda);
    CAPTURE(gamma0);

    for (const ResidualReport& r : boundary_residuals(p, times)) {
      CHECK(r.max_abs < 1e-9);
    }

    double recovered =
        inverse_solve(sol, p.P_m, widen_bracket(sol, gamma0, p.P_m));
    CHECK(std::fabs(recovered - gamma0) < 1e-10);
  }
}

TEST_CASE("inverse_solve contract") {
  SimilaritySolution sol = reference_solution();
  StefanProblem p = forward_solve(sol, 1.0);

  SUBCASE("root on the bracket endpoint is returned directly") {
    CHECK(inverse_solve(sol, p.P_m, {1.0, 2.0}) == 1.0);
  }

  SUBCASE("bracket without sign change is reported") {
    CHECK_THROWS_AS(inverse_solve(sol, 100.0, {0.5, 0.6}),
                    std::invalid_argument);
  }

  SUBCASE("bracket below the positivity floor is rejected") {
    CHECK_THROWS_AS(inverse_solve(sol, p.P_m, {0.0, 2.0}), std::domain_error);
    CHECK_THROWS_AS(inverse_solve(sol, p.P_m, {1.0, 0.5}), std::domain_error);
  }
}
