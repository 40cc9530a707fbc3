#include <benchmark/benchmark.h>

#include "otto/adiabaticity.hpp"
#include "otto/bounds.hpp"
#include "otto/ensemble.hpp"
#include "otto/thermo.hpp"

namespace {

void BM_EvaluateCycle(benchmark::State& state) {
  const double v = static_cast<double>(state.range(0)) / 100.0;
  const otto::EngineParams p{.omega_c = 3.0, .omega_h = 7.0, .beta_c = 0.4, .beta_h = 0.1,
                             .v = otto::Velocity(v), .lam = 1.1};
  for (auto _ : state) benchmark::DoNotOptimize(otto::evaluate_cycle(p));
}
// v = 0 takes the stationary branch, 0.2 the small-rapidity quadrature, 0.9 the closed form.
BENCHMARK(BM_EvaluateCycle)->Arg(0)->Arg(20)->Arg(90);

void BM_BoundsReport(benchmark::State& state) {
  const otto::Velocity v(0.9);
  for (auto _ : state) benchmark::DoNotOptimize(otto::bounds_report(0.25, v));
}
BENCHMARK(BM_BoundsReport);

void BM_SolveHusimi(benchmark::State& state) {
  const auto p = otto::DriveProtocol::linear_omega(1.0, 2.0, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(otto::solve_husimi(p));
}
BENCHMARK(BM_SolveHusimi)->Arg(1)->Arg(20)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_Histogram(benchmark::State& state) {
  auto cfg = otto::fig5_preset(42);
  cfg.count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(otto::run_histogram(cfg, 50, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Histogram)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
