// bench_decompose.cpp — throughput of the hot paths across register sizes.
#include <benchmark/benchmark.h>

#include "leadvec/decomposer.hpp"
#include "leadvec/leading_vector.hpp"
#include "leadvec/product_structure.hpp"
#include "leadvec/rng.hpp"

using namespace leadvec;

static void BM_SweepUpdateBit(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const RegisterState h = random_state(l, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_update_bit(h, l / 2));
  }
  state.SetComplexityN(int64_t{1} << l);
}
BENCHMARK(BM_SweepUpdateBit)->DenseRange(8, 16, 4)->Complexity();

static void BM_ApplyLocalFrame(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const RegisterState h = random_state(l, 8);
  std::mt19937_64 rng(9);
  const LocalFrame f = random_local_frame(l, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_local_frame(h, f));
  }
  state.SetComplexityN(int64_t{1} << l);
}
BENCHMARK(BM_ApplyLocalFrame)->DenseRange(8, 16, 4)->Complexity();

static void BM_OptimizeFrameSingleRestart(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const RegisterState h = random_state(l, 10);
  OptimizerConfig cfg;
  cfg.restarts = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_frame(h, cfg));
  }
}
BENCHMARK(BM_OptimizeFrameSingleRestart)->DenseRange(6, 14, 4)
    ->Unit(benchmark::kMillisecond);

static void BM_Decompose(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const RegisterState h = random_state(l, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(h));
  }
}
BENCHMARK(BM_Decompose)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

static void BM_IsProduct(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const RegisterState h = random_state(l, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_product(h));
  }
  state.SetComplexityN(int64_t{1} << l);
}
BENCHMARK(BM_IsProduct)->DenseRange(8, 16, 4)->Complexity();

static void BM_LeadingVector(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  RegisterState h = random_state(l, 13);
  h[0] = Complex(0.5, 0.25);  // keep the direct path
  for (auto _ : state) {
    benchmark::DoNotOptimize(leading_vector(h));
  }
  state.SetComplexityN(int64_t{1} << l);
}
BENCHMARK(BM_LeadingVector)->DenseRange(8, 16, 4)->Complexity();

BENCHMARK_MAIN();
