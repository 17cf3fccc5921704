#include <benchmark/benchmark.h>

#include "mwis/approx.hpp"
#include "mwis/boost.hpp"
#include "mwis/generators.hpp"
#include "mwis/mis.hpp"
#include "mwis/oracle.hpp"
#include "mwis/ranking.hpp"
#include "mwis/sparsify.hpp"

namespace {

using namespace mwis;

WeightedGraph gnp(std::int64_t n, double avg_degree, WeightModel w = WeightModel::uniform_range) {
  GraphSpec s;
  s.family = Family::gnp;
  s.n = n;
  s.p = avg_degree / static_cast<double>(n - 1);
  s.weights = w;
  s.seed = 1;
  return generate(s);
}

void BM_Luby(benchmark::State& state) {
  const auto g = gnp(state.range(0), 10);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    sim::SimOptions o;
    o.seed = seed++;
    benchmark::DoNotOptimize(sim::run(g, luby_mis_program(), o));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Luby)->Arg(1 << 10)->Arg(1 << 13)->Unit(benchmark::kMillisecond);

void BM_LubyThreads(benchmark::State& state) {
  const auto g = gnp(1 << 13, 10);
  for (auto _ : state) {
    sim::SimOptions o;
    o.threads = static_cast<unsigned>(state.range(0));
    benchmark::DoNotOptimize(sim::run(g, luby_mis_program(), o));
  }
}
BENCHMARK(BM_LubyThreads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Heavy(benchmark::State& state) {
  const auto g = gnp(state.range(0), 20);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(heavy_mis_approx(Instance::whole(g), seed++));
}
BENCHMARK(BM_Heavy)->Arg(1 << 10)->Arg(1 << 12)->Unit(benchmark::kMillisecond);

void BM_Sparse(benchmark::State& state) {
  const auto g = gnp(4096, static_cast<double>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sparse_approx(Instance::whole(g), {}, seed++));
}
BENCHMARK(BM_Sparse)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_BoostHeavy(benchmark::State& state) {
  const auto g = gnp(1000, 8);
  const double eps = 1.0 / static_cast<double>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(boost(g, heavy_algorithm(), {eps, 8}, seed++));
}
BENCHMARK(BM_BoostHeavy)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Boppana(benchmark::State& state) {
  const auto g = gnp(4096, 30, WeightModel::unit);
  const BoppanaProgram program(2);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    sim::SimOptions o;
    o.seed = seed++;
    benchmark::DoNotOptimize(sim::run(g, program, o));
  }
}
BENCHMARK(BM_Boppana)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const auto g = gnp(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_max_is(g));
}
BENCHMARK(BM_Oracle)->DenseRange(16, 26, 5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
