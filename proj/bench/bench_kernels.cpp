// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "qwalk/kernels.hpp"

namespace {

using qwalk::Amplitude;

struct Buffers {
  std::vector<Amplitude> left, right, out_left, out_right;
  std::vector<double> probs;

  explicit Buffers(std::size_t n)
      : left(n), right(n), out_left(n), out_right(n), probs(n) {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = static_cast<double>(i % 97) / 97.0;
      left[i] = {x, 0.5 - x};
      right[i] = {1.0 - x, x * x};
    }
  }
};

const qwalk::CoinMatrix kCoin = qwalk::make_coin(qwalk::CoinParams::hadamard());

template <auto Kernel>
void BM_coin_shift_line(benchmark::State& state) {
  Buffers b(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Kernel(kCoin, b.left, b.right, b.out_left, b.out_right, 0, b.left.size());
    benchmark::DoNotOptimize(b.out_left.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_coin_shift_cycle(benchmark::State& state) {
  Buffers b(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Kernel(kCoin, b.left, b.right, b.out_left, b.out_right);
    benchmark::DoNotOptimize(b.out_left.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_apply_coin(benchmark::State& state) {
  Buffers b(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Kernel(kCoin, b.left, b.right, 0, b.left.size());
    benchmark::DoNotOptimize(b.left.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_probabilities(benchmark::State& state) {
  Buffers b(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Kernel(b.left, b.right, b.probs);
    benchmark::DoNotOptimize(b.probs.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

constexpr std::int64_t kMin = 1 << 10;
constexpr std::int64_t kMax = 1 << 22;

}  // namespace

BENCHMARK(BM_coin_shift_line<qwalk::kernels::coin_shift_line_serial>)->Name("coin_shift_line/serial")->RangeMultiplier(8)->Range(kMin, kMax);
BENCHMARK(BM_coin_shift_line<qwalk::kernels::coin_shift_line_omp>)->Name("coin_shift_line/omp")->RangeMultiplier(8)->Range(kMin, kMax)->UseRealTime();
BENCHMARK(BM_coin_shift_cycle<qwalk::kernels::coin_shift_cycle_serial>)->Name("coin_shift_cycle/serial")->RangeMultiplier(8)->Range(kMin, kMax);
BENCHMARK(BM_coin_shift_cycle<qwalk::kernels::coin_shift_cycle_omp>)->Name("coin_shift_cycle/omp")->RangeMultiplier(8)->Range(kMin, kMax)->UseRealTime();
BENCHMARK(BM_apply_coin<qwalk::kernels::apply_coin_serial>)->Name("apply_coin/serial")->RangeMultiplier(8)->Range(kMin, kMax);
BENCHMARK(BM_apply_coin<qwalk::kernels::apply_coin_omp>)->Name("apply_coin/omp")->RangeMultiplier(8)->Range(kMin, kMax)->UseRealTime();
BENCHMARK(BM_probabilities<qwalk::kernels::probabilities_serial>)->Name("probabilities/serial")->RangeMultiplier(8)->Range(kMin, kMax);
BENCHMARK(BM_probabilities<qwalk::kernels::probabilities_omp>)->Name("probabilities/omp")->RangeMultiplier(8)->Range(kMin, kMax)->UseRealTime();

BENCHMARK_MAIN();
