#include <benchmark/benchmark.h>

#include "binsum/binomial_sums.hpp"
#include "binsum/padic.hpp"
#include "binsum/verifier.hpp"

namespace {

void BM_FDirect(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto r = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binsum::f_direct(n, r));
  }
}
BENCHMARK(BM_FDirect)->Args({10, 5})->Args({30, 20})->Args({60, 40});

void BM_FRecurrenceR(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto r = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    binsum::MemoTable memo;  // cold table: measures the whole triangle
    benchmark::DoNotOptimize(binsum::f_recurrence_r(n, r, memo));
  }
}
BENCHMARK(BM_FRecurrenceR)->Args({10, 5})->Args({30, 20})->Args({60, 40});

void BM_FRecurrenceMixed(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto r = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    binsum::MemoTable memo;
    benchmark::DoNotOptimize(binsum::f_recurrence_mixed(n, r, memo));
  }
}
BENCHMARK(BM_FRecurrenceMixed)->Args({10, 5})->Args({30, 20})->Args({60, 40});

void BM_DigitSum(benchmark::State& state) {
  const auto base = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t n = 0xdeadbeefcafef00dULL;
  for (auto _ : state) {
    benchmark::DoNotOptimize(binsum::digit_sum(n, base));
    ++n;
  }
}
BENCHMARK(BM_DigitSum)->Arg(2)->Arg(3)->Arg(13);

void BM_NuFactorial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binsum::nu_factorial(n, 2));
  }
}
BENCHMARK(BM_NuFactorial)->Arg(1000)->Arg(100000);

void BM_VerifyTheorem(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto r = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binsum::verify_theorem(n, r));
  }
}
BENCHMARK(BM_VerifyTheorem)->Args({10, 5})->Args({60, 40});

void BM_SweepTheorem(benchmark::State& state) {
  binsum::SweepConfig config;
  config.n_max = 30;
  config.r_max = 20;
  config.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binsum::sweep(config));
  }
}
// Work happens on spawned threads, so wall time is the meaningful metric.
BENCHMARK(BM_SweepTheorem)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
