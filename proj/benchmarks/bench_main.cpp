#include <benchmark/benchmark.h>

#include "fanmoduli/degeneration.hpp"
#include "fanmoduli/linalg.hpp"
#include "fanmoduli/moduli.hpp"
#include "fanmoduli/random.hpp"

using namespace fanmoduli;

namespace {

RationalMatrix random_square(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational(5, 7);
  return m;
}

void BM_Det(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Det)->Arg(4)->Arg(8)->Arg(16);

void BM_Kernel(benchmark::State& state) {
  Rng rng(2);
  const auto h = random_calibration(rng, 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(h.matrix()));
}
BENCHMARK(BM_Kernel)->Arg(6)->Arg(12);

void BM_AutomorphismCycle8(benchmark::State& state) {
  const auto t = types::cycle(8);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(t));
}
BENCHMARK(BM_AutomorphismCycle8);

void BM_AutomorphismSimplex4(benchmark::State& state) {
  const auto t = types::simplex(4);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(t));
}
BENCHMARK(BM_AutomorphismSimplex4);

void BM_IsAdmissible(benchmark::State& state) {
  const auto t = types::cycle(static_cast<int>(state.range(0)));
  const auto h = reference::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_admissible(h, t));
}
BENCHMARK(BM_IsAdmissible)->Arg(4)->Arg(8);

void BM_StrataScan(benchmark::State& state) {
  const auto t = types::cycle(4);
  const auto h0 = reference::cycle(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(strata_scan(t, h0, {static_cast<std::size_t>(state.range(0)), 1, {}, 1}));
}
BENCHMARK(BM_StrataScan)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
