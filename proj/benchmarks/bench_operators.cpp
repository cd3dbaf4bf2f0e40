#include <benchmark/benchmark.h>

#include "ebie/geometry.hpp"
#include "ebie/potentials.hpp"
#include "ebie/solver.hpp"

namespace {

using namespace ebie;

Curve bench_kite() {
  Curve c;
  c.cos_coeffs = {Vec2(-0.65, 0.0), Vec2(1.0, 0.0), Vec2(0.65, 0.0)};
  c.sin_coeffs = {Vec2::Zero(), Vec2(0.0, 1.5)};
  return c;
}

constexpr LamePair kBackground{1.0, 1.0};
constexpr LamePair kInclusion{3.0, 2.0};

void BM_AssembleSingle(benchmark::State& state) {
  const BoundaryGrid grid = sample_grid(bench_kite(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_single(grid, kBackground));
  }
}
BENCHMARK(BM_AssembleSingle)->Arg(64)->Arg(128)->Arg(256);

void BM_AssembleAdjointDouble(benchmark::State& state) {
  const BoundaryGrid grid = sample_grid(bench_kite(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_kstar(grid, kBackground));
  }
}
BENCHMARK(BM_AssembleAdjointDouble)->Arg(64)->Arg(128)->Arg(256);

void BM_AssembleHypersingular(benchmark::State& state) {
  const BoundaryGrid grid = sample_grid(bench_kite(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_dsharp_conormal_avg(grid, kBackground));
  }
}
BENCHMARK(BM_AssembleHypersingular)->Arg(64)->Arg(128)->Arg(256);

void BM_SolveTransmission(benchmark::State& state) {
  TransmissionProblem problem;
  problem.curve = bench_kite();
  problem.background = kBackground;
  problem.inclusion = kInclusion;
  problem.H.terms = {{1.0, 0, 1, 0}, {1.0, 1, 0, 1}};
  problem.nodes = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_base(problem));
  }
}
BENCHMARK(BM_SolveTransmission)->Arg(64)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
