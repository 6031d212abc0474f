// Acceptance gate: one line per criterion, nonzero exit if any fail.
// Each check re-derives its inputs from scratch and pins its own tolerances.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "airystef/airy.hpp"
#include "airystef/ermakov.hpp"
#include "airystef/grid.hpp"
#include "airystef/involutory.hpp"
#include "airystef/reciprocal.hpp"
#include "airystef/similarity.hpp"
#include "airystef/stefan.hpp"

using namespace airystef;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED " + what;
    }
  }

  void note(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

SimilaritySolution default_solution() {
  return make_solution(make_params(1.0, 1.0, 0.0), 1.0);
}

Outcome criterion_airy() {
  Outcome out;
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    AiryValues v = airy(dist(rng));
    worst = std::fmax(worst, std::fabs(v.ai * v.bip - v.aip * v.bi -
                                       std::numbers::inv_pi));
  }
  out.require(worst < 1e-11, "Wronskian defect < 1e-11");
  out.note("wronskian defect " + fmt(worst));

  double branch_gap = 0.0;
  for (double z : {kAirySwitchRadius, -kAirySwitchRadius}) {
    AiryValues m = detail::airy_maclaurin(z);
    AiryValues s = detail::airy_asymptotic(z);
    double pairs[4][2] = {{m.ai, s.ai}, {m.aip, s.aip}, {m.bi, s.bi},
                          {m.bip, s.bip}};
    for (auto& p : pairs) {
      branch_gap = std::fmax(branch_gap,
                             std::fabs(p[0] - p[1]) / std::fabs(p[1]));
    }
  }
  out.require(branch_gap < 1e-11, "branch agreement < 1e-11 relative");
  out.note("branch gap " + fmt(branch_gap));
  return out;
}

Outcome criterion_ermakov() {
  Outcome out;
  std::mt19937 rng(987123);
  std::uniform_real_distribution<double> lambda(0.3, 3.0), c1(0.5, 2.0),
      c2(-0.5, 0.5), zdist(-3.0, 3.0);
  double worst = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    ErmakovParams p = make_params(lambda(rng), c1(rng), c2(rng));
    for (int k = 0; k < 25; ++k) {
      double z = zdist(rng);
      PsiValues v = psi(p, p.epsilon * z);
      double r = p.epsilon * p.epsilon * v.d2psi + 0.5 * z * v.psi -
                 p.kstar / (v.psi * v.psi * v.psi);
      worst = std::fmax(worst, std::fabs(r));
    }
  }
  out.require(worst < 1e-9, "superposition residual < 1e-9 (100 draws)");
  out.note("max residual " + fmt(worst));

  ErmakovParams p = make_params(1.0, 1.0, 0.25);
  double dev = integrate_oracle(p, -3.0, 3.0, 10000);
  out.require(dev < 1e-8, "oracle deviation < 1e-8 at 1e4 steps");
  double order =
      std::log2(integrate_oracle(p, -3.0, 3.0, 1000) /
                integrate_oracle(p, -3.0, 3.0, 2000));
  out.require(order >= 3.8, "oracle order >= 3.8");
  out.note("oracle dev " + fmt(dev) + ", order " + fmt(order));
  return out;
}

Outcome criterion_pde() {
  Outcome out;
  SimilaritySolution sol = default_solution();
  GridSpec grid{0.02, 0.98, 0.0, 10.0, 50, 50};
  PdeResiduals r = pde_residual(sol, grid, {});
  out.require(r.analytic.max_abs < 1e-9, "analytic residual < 1e-9");
  out.note("analytic " + fmt(r.analytic.max_abs));

  GridSpec sub{0.1, 0.9, 0.5, 5.0, 12, 12};
  PdeResidualOptions coarse{4e-3, 4e-3, {}}, fine{2e-3, 2e-3, {}};
  double rc = pde_residual(sol, sub, coarse).finite_difference.max_abs;
  double rf = pde_residual(sol, sub, fine).finite_difference.max_abs;
  double order = std::log2(rc / rf);
  out.require(order >= 1.8, "FD residual 2nd-order under step halving");
  out.note("FD order " + fmt(order));

  PdeResidualOptions bent;
  bent.lambda_override = sol.params.lambda * (1.0 + 1e-3);
  double perturbed = pde_residual(sol, grid, bent).analytic.max_abs;
  out.require(perturbed > 1e-6, "lambda perturbation raises residual > 1e-6");
  out.note("perturbed " + fmt(perturbed));
  return out;
}

Outcome criterion_stefan() {
  Outcome out;
  StefanProblem p = forward_solve(default_solution(), 1.0);
  std::vector<double> times(20);
  for (int i = 0; i < 20; ++i) times[i] = 10.0 * i / 19.0;
  double worst = 0.0;
  for (const ResidualReport& r : boundary_residuals(p, times)) {
    worst = std::fmax(worst, r.max_abs);
  }
  out.require(worst < 1e-9, "boundary residuals < 1e-9 at 20 times");
  out.note("boundary " + fmt(worst));

  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> lambda(0.3, 3.0), c1(0.5, 2.0),
      c2(-0.5, 0.5), gamma(0.5, 2.0);
  double worst_rel = 0.0, worst_h0 = 0.0, worst_round = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    SimilaritySolution sol =
        make_solution(make_params(lambda(rng), c1(rng), c2(rng)), 1.0);
    double g0 = gamma(rng);
    StefanProblem q = forward_solve(sol, g0);
    worst_rel = std::fmax(worst_rel,
                          std::fabs(q.L_m - q.P_m) / std::fabs(q.P_m));
    worst_h0 = std::fmax(worst_h0, std::fabs(q.H_0));

    auto f = [&sol, &q](double g) {
      return g * psi(sol.params, g).psi - q.P_m;
    };
    double lo = std::fmax(kMinGamma, 0.9 * g0), hi = 1.1 * g0;
    for (int k = 0; k < 60 && f(lo) * f(hi) > 0.0; ++k) {
      lo = std::fmax(kMinGamma, 0.9 * lo);
      hi *= 1.1;
    }
    double recovered = inverse_solve(sol, q.P_m, {lo, hi});
    worst_round = std::fmax(worst_round, std::fabs(recovered - g0));
  }
  out.require(worst_rel < 1e-10, "|L_m - P_m|/|P_m| < 1e-10 over sweep");
  out.require(worst_h0 < 1e-10, "|H_0| < 1e-10 over sweep");
  out.require(worst_round <= 1e-10, "gamma round-trip to 1e-10");
  out.note("relation gap " + fmt(worst_rel) + ", H_0 " + fmt(worst_h0) +
           ", round-trip " + fmt(worst_round));
  return out;
}

Outcome criterion_reciprocal() {
  Outcome out;
  StefanProblem p = forward_solve(default_solution(), 1.0);

  double gap = 0.0;
  for (double x : {0.3, 0.6, 0.9}) {
    auto [a, b] = x_star_two_routes(p, x, 0.5, 4.0, 64);
    gap = std::fmax(gap, std::fabs(a - b));
  }
  out.require(gap < 1e-8, "path independence < 1e-8");
  out.note("path gap " + fmt(gap));

  double drift = std::fabs(x_star_time_leg(p, 0.0, 0.0, 10.0, 64));
  out.require(drift < 1e-10, "left image boundary stationary to 1e-10");
  out.note("drift " + fmt(drift));

  auto lattice = [](int n) {
    GridSpec g{0.6, 1.0, 0.5, 0.9, n, n};
    return g;
  };
  double r21 = compatibility_residual(p, lattice(21), 64).max_abs;
  double r41 = compatibility_residual(p, lattice(41), 64).max_abs;
  double r81 = compatibility_residual(p, lattice(81), 64).max_abs;
  double order1 = std::log2(r21 / r41), order2 = std::log2(r41 / r81);
  out.require(order1 >= 1.8 && order2 >= 1.8,
              "compatibility residual 2nd-order convergent");
  out.note("compat orders " + fmt(order1) + "/" + fmt(order2));

  SStarCurve curve = s_star_curve(p, 128);
  out.require(std::fabs(curve.coeff) < 1e-10, "|s_star_coeff| < 1e-10");
  out.note("s_star_coeff " + fmt(curve.coeff) +
           " (ln(t*+a) term degenerates on exact instances)");
  return out;
}

Outcome criterion_involutory() {
  Outcome out;
  GridSpec grid{0.1, 0.9, 0.5, 1.5, 20, 20};
  double rt_const = involution_check(Modulation::constant(3.0), grid);
  double rt_power = involution_check(Modulation::power(0.4, 1.0), grid);
  out.require(rt_const < 1e-10 && rt_power < 1e-10,
              "involution round-trip < 1e-10");
  out.note("round-trip const " + fmt(rt_const) + ", power " + fmt(rt_power));

  SimilaritySolution sol = default_solution();
  Modulation mod = Modulation::power(0.25, 1.0);
  GridSpec dense{0.1, 0.9, 0.5, 1.5, 30, 30};
  double res = modulated_residual(sol, mod, dense, {}).max_abs;
  out.require(res < 1e-4, "modulated residual < 1e-4 at steps 1e-3");
  out.note("modulated " + fmt(res));

  GridSpec sub{0.1, 0.9, 0.5, 1.5, 12, 12};
  double rc = modulated_residual(sol, mod, sub, {8e-3, 8e-3, false}).max_abs;
  double rf = modulated_residual(sol, mod, sub, {4e-3, 4e-3, false}).max_abs;
  double order = std::log2(rc / rf);
  out.require(order >= 1.8, "modulated residual 2nd-order convergent");
  out.note("order " + fmt(order));

  double full = modulated_residual(sol, mod, sub, {}).max_abs;
  double ablated =
      modulated_residual(sol, mod, sub, {1e-3, 1e-3, true}).max_abs;
  out.require(ablated > 10.0 * full, "term ablation raises residual >= 10x");
  out.note("ablation x" + fmt(ablated / full));
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion_cli() {
  Outcome out;
  std::filesystem::path root = AIRYSTEF_REPO_ROOT;
  std::filesystem::path work =
      std::filesystem::temp_directory_path() / "airystef_acceptance";
  std::filesystem::remove_all(work);
  std::filesystem::create_directories(work);

  std::string base = std::string(AIRYSTEF_CLI_PATH) + " solve --config " +
                     (root / "configs" / "default.json").string();
  int status = std::system(
      (base + " --out " + (work / "out").string() + " > /dev/null 2>&1")
          .c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  out.require(code == 0, "default config exits 0");

  for (const char* name : {"problem.json", "residuals.json"}) {
    std::string got = slurp(work / "out" / name);
    std::string want = slurp(root / "tests" / "golden" / name);
    out.require(!want.empty() && got == want,
                std::string(name) + " byte-identical to golden");
  }

  status = std::system(
      (base + " --lambda=-1 --out " + (work / "bad").string() +
       " > /dev/null 2>&1")
          .c_str());
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  out.require(code == 2, "invalid lambda exits 2");
  out.note("exit codes and goldens verified");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"Airy foundation", 1.0, criterion_airy},
      {"Ermakov superposition", 5.0, criterion_ermakov},
      {"exact PDE solution", 5.0, criterion_pde},
      {"Stefan problem", 5.0, criterion_stefan},
      {"reciprocal transformation", 10.0, criterion_reciprocal},
      {"involutory family", 5.0, criterion_involutory},
      {"CLI contract", 2.0, criterion_cli},
  };

  int failures = 0, index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > c.budget_s) {
      result.pass = false;
      result.detail += "; exceeded " + fmt(c.budget_s) + " s budget";
    }
    std::printf("[%s] %d. %s: %s (%.2f s)\n", result.pass ? "PASS" : "FAIL",
                index, c.name, result.detail.c_str(), elapsed);
    if (!result.pass) ++failures;
  }
  std::printf("%d/7 criteria passed\n", 7 - failures);
  return failures == 0 ? 0 : 1;
}
