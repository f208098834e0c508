#include <benchmark/benchmark.h>

#include "toricsym/census.hpp"
#include "toricsym/chow.hpp"
#include "toricsym/symmetry.hpp"

using namespace toricsym;

namespace {

const char* const kPermutohedral = "p123,p124,p134,p234,l12,l13,l14,l23,l24,l34";

void BM_BuildPermutohedral(benchmark::State& state) {
  const BlowupConfig c = parse_centers(kPermutohedral);
  for (auto _ : state) benchmark::DoNotOptimize(build(c));
}
BENCHMARK(BM_BuildPermutohedral);

void BM_SymmetriesPermutohedral(benchmark::State& state) {
  const BlowupSpace x = build(parse_centers(kPermutohedral));
  for (auto _ : state) benchmark::DoNotOptimize(find_symmetries(x));
}
BENCHMARK(BM_SymmetriesPermutohedral);

void BM_IntersectionTablePermutohedral(benchmark::State& state) {
  const BlowupSpace x = build(parse_centers(kPermutohedral));
  const std::size_t n = x.basis_size();
  for (auto _ : state) {
    Int sum = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) sum += product(x, basis_divisor(x, i), basis_divisor(x, j)).degree();
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_IntersectionTablePermutohedral);

void BM_Dedup(benchmark::State& state) {
  const auto configs = enumerate_configs(3);
  for (auto _ : state) benchmark::DoNotOptimize(dedup(configs));
}
BENCHMARK(BM_Dedup)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_census(3, true, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Census)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
