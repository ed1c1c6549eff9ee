#include <benchmark/benchmark.h>

#include "fleetic/availability.hpp"
#include "fleetic/demand.hpp"
#include "fleetic/pareto.hpp"
#include "fleetic/solver.hpp"
#include "fleetic/synthetic.hpp"

namespace {

using namespace fleetic;

const Instance& city() {
  static const Instance inst = make_synthetic_instance();
  return inst;
}

const CoverMatrix& city_cover() {
  static const CoverMatrix cover = build_cover_matrix(city());
  return cover;
}

void BM_BuildCoverMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_cover_matrix(city()));
}
BENCHMARK(BM_BuildCoverMatrix)->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State& state) {
  SolveOptions o;
  o.mode = SolveMode::greedy;
  for (auto _ : state) benchmark::DoNotOptimize(solve(city(), city_cover(), o));
}
BENCHMARK(BM_Greedy)->Unit(benchmark::kMillisecond);

void BM_GreedyLocalSearch(benchmark::State& state) {
  SolveOptions o;
  o.mode = SolveMode::greedy_local_search;
  for (auto _ : state) benchmark::DoNotOptimize(solve(city(), city_cover(), o));
}
BENCHMARK(BM_GreedyLocalSearch)->Unit(benchmark::kMillisecond);

void BM_WeightedGreedyLocalSearch(benchmark::State& state) {
  SolveOptions o;
  o.mode = SolveMode::greedy_local_search;
  o.lambda = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(solve(city(), city_cover(), o));
}
BENCHMARK(BM_WeightedGreedyLocalSearch)->Unit(benchmark::kMillisecond);

void BM_BCoverageGreedyLocalSearch(benchmark::State& state) {
  ReliabilityRequirement req;
  req.required = {{"USA", 2}, {"USB", 2}};
  SolveOptions o;
  o.mode = SolveMode::greedy_local_search;
  for (auto _ : state) benchmark::DoNotOptimize(solve_b_coverage(city(), city_cover(), req, o));
}
BENCHMARK(BM_BCoverageGreedyLocalSearch)->Unit(benchmark::kMillisecond);

void BM_Sweep11(benchmark::State& state) {
  SweepOptions o;
  o.grid_size = 11;
  o.jobs = static_cast<unsigned>(state.range(0));
  o.solve.mode = SolveMode::greedy_local_search;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_lambda(city(), city_cover(), o));
}
BENCHMARK(BM_Sweep11)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_GenerateMonth(benchmark::State& state) {
  const RateTable table = synthetic_rate_table({});
  GenerateOptions o;
  o.days = 30;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_calls(table, o));
    ++o.seed;
  }
}
BENCHMARK(BM_GenerateMonth)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
