#include <benchmark/benchmark.h>

#include <vector>

#include "airystef/airy.hpp"
#include "airystef/ermakov.hpp"
#include "airystef/grid.hpp"
#include "airystef/involutory.hpp"
#include "airystef/reciprocal.hpp"
#include "airystef/similarity.hpp"
#include "airystef/stefan.hpp"

namespace {

const airystef::ErmakovParams& params() {
  static const airystef::ErmakovParams p = airystef::make_params(1.0, 1.0, 0.0);
  return p;
}

const airystef::SimilaritySolution& solution() {
  static const airystef::SimilaritySolution s =
      airystef::make_solution(params(), 1.0);
  return s;
}

const airystef::StefanProblem& problem() {
  static const airystef::StefanProblem pr =
      airystef::forward_solve(solution(), 1.0);
  return pr;
}

void BM_AirySeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(airystef::airy(2.0));
}
BENCHMARK(BM_AirySeries);

void BM_AiryAsymptotic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(airystef::airy(12.0));
}
BENCHMARK(BM_AiryAsymptotic);

void BM_AiryOscillatory(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(airystef::airy(-15.0));
}
BENCHMARK(BM_AiryOscillatory);

void BM_PsiEval(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(airystef::psi(params(), 0.7));
}
BENCHMARK(BM_PsiEval);

void BM_SolutionEval(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(airystef::eval_u(solution(), 0.4, 2.0));
}
BENCHMARK(BM_SolutionEval);

void BM_SolutionDerivs(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(airystef::eval_derivs(solution(), 0.4, 2.0));
}
BENCHMARK(BM_SolutionDerivs);

void BM_BoundaryResiduals(benchmark::State& state) {
  std::vector<double> times(20);
  for (int i = 0; i < 20; ++i) times[i] = 0.5 * (i + 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(airystef::boundary_residuals(problem(), times));
}
BENCHMARK(BM_BoundaryResiduals);

void BM_XStarQuadrature(benchmark::State& state) {
  const int n_quad = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(airystef::x_star(problem(), 0.8, 1.0, n_quad));
}
BENCHMARK(BM_XStarQuadrature)->Arg(16)->Arg(64)->Arg(256);

void BM_CompatibilityLattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  airystef::GridSpec grid{0.6, 1.0, 0.5, 0.9, n, n};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        airystef::compatibility_residual(problem(), grid, 64));
}
BENCHMARK(BM_CompatibilityLattice)->Arg(11)->Arg(21)->Unit(benchmark::kMillisecond);

void BM_ModulationRoundTrip(benchmark::State& state) {
  static const airystef::Modulation mod = airystef::Modulation::power(0.25, 1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(mod.t_of_t_star(mod.t_star_of_t(2.0)));
}
BENCHMARK(BM_ModulationRoundTrip);

void BM_ModulatedResidual(benchmark::State& state) {
  static const airystef::Modulation mod = airystef::Modulation::power(0.25, 1.0);
  airystef::GridSpec grid{0.1, 0.9, 0.5, 1.5, 12, 12};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        airystef::modulated_residual(solution(), mod, grid));
  }
BENCHMARK(BM_ModulatedResidual)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
