// Serial reference against the OpenMP kernels. Argument 0 is serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "polycx/curvature.hpp"
#include "polycx/hyperplanes.hpp"
#include "polycx/verify.hpp"

using namespace polycx;

namespace {

Execution execution(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

const Enumeration& octagon() {
  static const Enumeration en = enumerate_full(parse_signature("0,0:8"));
  return en;
}

const Enumeration& punctured_pentagon() {
  static const Enumeration en = enumerate_full(parse_signature("0,1:5"));
  return en;
}

void flip_graph_bfs(benchmark::State& state) {
  EnumerationOptions opts;
  opts.execution = execution(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_full(parse_signature("0,0:10"), opts));
}

void separation(benchmark::State& state) {
  const auto& cx = octagon().complex;
  const auto hs = hyperplanes(cx);
  for (auto _ : state) benchmark::DoNotOptimize(separation_census(cx, hs, execution(state)));
}

void curvature_precompute(benchmark::State& state) {
  const auto& cx = punctured_pentagon().complex;
  for (auto _ : state) {
    OrientationSolver solver(cx);
    solver.precompute(execution(state));
    benchmark::DoNotOptimize(solver);
  }
}

void link_condition(benchmark::State& state) {
  const auto& cx = punctured_pentagon().complex;
  for (auto _ : state) benchmark::DoNotOptimize(is_nonpositively_curved(cx, execution(state)));
}

// Cube suite, dominated by the union and intersection closure check.
void cube_suite(benchmark::State& state) {
  auto en = enumerate_full(parse_signature("0,0:8"));
  for (auto _ : state) benchmark::DoNotOptimize(verify_cubes(en.complex, en, execution(state)));
}

}  // namespace

BENCHMARK(flip_graph_bfs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(separation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(curvature_precompute)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(link_condition)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(cube_suite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
