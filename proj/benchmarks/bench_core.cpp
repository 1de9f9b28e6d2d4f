#include <benchmark/benchmark.h>

#include "papso/gsuite.hpp"
#include "papso/harness.hpp"
#include "papso/random.hpp"
#include "papso/sampling.hpp"
#include "papso/swarm.hpp"

namespace {

using namespace papso;

void BM_PenalizedEvaluation(benchmark::State& state) {
  const auto bench = get_problem(benchmark_names()[static_cast<std::size_t>(state.range(0))]);
  const PenalizedEvaluator evaluator(bench.problem, PenaltyConfig{});
  const ToleranceState tol = ToleranceState::final_state();
  Rng rng(7);
  std::vector<std::vector<double>> points;
  for (int i = 0; i < 256; ++i) points.push_back(sample_in_bounds(bench.problem, rng));
  EvalCounters counters;
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluator.evaluate(points[k++ & 255], tol, counters));
  }
  state.SetLabel(bench.problem.name);
}
BENCHMARK(BM_PenalizedEvaluation)->DenseRange(0, 12);

void BM_LatinHypercubeInit(benchmark::State& state) {
  const auto bench = get_problem("g02");
  const auto bounds = problem_bounds(bench.problem);
  Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        latin_hypercube_init(50, bounds, static_cast<std::size_t>(state.range(0)), rng));
  }
}
BENCHMARK(BM_LatinHypercubeInit)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SwarmStep(benchmark::State& state) {
  const auto bench = get_problem("g07");
  const PenalizedEvaluator evaluator(bench.problem, PenaltyConfig{});
  const ToleranceState tol = ToleranceState::final_state();
  EvalCounters counters;
  const PointEvaluator evaluate = [&](std::span<const double> x) {
    return evaluator.evaluate(x, tol, counters);
  };
  const auto n = static_cast<std::size_t>(state.range(0));
  const Topology topology = build_forward_topology(n, 3, 2);
  const auto coeffs = default_coefficient_sets();
  Rng rng(11);
  const auto init = latin_hypercube_init(n, problem_bounds(bench.problem), 10, rng);
  Swarm swarm = initialize_swarm(init.positions, topology, evaluate);
  for (auto _ : state) step_swarm(swarm, topology, coeffs, evaluate, rng);
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_SwarmStep)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
