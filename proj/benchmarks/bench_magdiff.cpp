#include <benchmark/benchmark.h>

#include "magdiff/exact.hpp"
#include "magdiff/quadrature.hpp"
#include "magdiff/simulator.hpp"

using namespace magdiff;

namespace {

const ProblemParams kBaseline{};

void BM_I1Tilde(benchmark::State& state) {
  const quadrature::IntegralArg a(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quadrature::i1_tilde(a));
}
BENCHMARK(BM_I1Tilde)->Arg(1)->Arg(12)->Arg(700);

void BM_SolveConstants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exact::solve_constants(kBaseline));
}
BENCHMARK(BM_SolveConstants)->Unit(benchmark::kMillisecond);

void BM_BuildProfile(benchmark::State& state) {
  const auto c = exact::solve_constants(kBaseline);
  for (auto _ : state)
    benchmark::DoNotOptimize(exact::build_profile(c, kBaseline, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BuildProfile)->Arg(401)->Arg(4001)->Unit(benchmark::kMillisecond);

void BM_EnergyAt(benchmark::State& state) {
  const exact::ExactSolution ex(kBaseline);
  const double x = 0.5 * ex.x_c(0.4);
  for (auto _ : state) benchmark::DoNotOptimize(ex.energy_at(x, 0.4));
}
BENCHMARK(BM_EnergyAt);

// Cost of simulator steps on a state that already carries a front.
void BM_SimulatorSteps(benchmark::State& state) {
  const sim::Mesh1D mesh{static_cast<std::size_t>(state.range(0)), 0.5};
  const double dt = sim::stable_dt(mesh, kBaseline, 0.4);
  sim::SimState warm = sim::init_state(mesh, kBaseline);
  sim::advance(warm, kBaseline, dt, static_cast<std::size_t>(0.05 / dt));
  constexpr std::size_t kSteps = 1000;
  for (auto _ : state) {
    state.PauseTiming();
    sim::SimState s = warm;
    state.ResumeTiming();
    sim::advance(s, kBaseline, dt, kSteps);
    benchmark::DoNotOptimize(s.B.data());
  }
  state.SetItemsProcessed(static_cast<long long>(state.iterations() * kSteps * mesh.n_cells));
}
BENCHMARK(BM_SimulatorSteps)->Arg(200)->Arg(1600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
