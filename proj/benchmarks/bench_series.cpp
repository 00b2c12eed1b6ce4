#include <benchmark/benchmark.h>

#include <complex>

#include "virasoro/characters.hpp"
#include "virasoro/growth.hpp"
#include "virasoro/qseries.hpp"

namespace {

using namespace virasoro;

void BM_euler_product(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_product(order, 1));
  }
  state.SetComplexityN(order);
}
BENCHMARK(BM_euler_product)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

void BM_partition_numbers(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition_numbers(order));
  }
  state.SetComplexityN(order);
}
BENCHMARK(BM_partition_numbers)->Arg(1000)->Arg(4000)->Arg(16000)->Complexity();

void BM_invert_dense(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const QExpansion product = euler_product(order, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert(product));
  }
  state.SetComplexityN(order);
}
BENCHMARK(BM_invert_dense)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

// The half-integral power behind the superpolynomial witness search.
void BM_pow_rational_half(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const QExpansion base = invert(euler_product(order, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pow_rational(base, rational(1, 2)));
  }
  state.SetComplexityN(order);
}
BENCHMARK(BM_pow_rational_half)->Arg(250)->Arg(500)->Arg(1000)->Complexity();

// Sparse pentagonal base: the eta-power path used by every character scaling.
void BM_eta_power(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eta_power(rational(-22, 5), order));
  }
  state.SetComplexityN(order);
}
BENCHMARK(BM_eta_power)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

void BM_irreducible_character(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(irreducible_character(2, 5, 1, 1, order));
  }
  state.SetComplexityN(order);
}
BENCHMARK(BM_irreducible_character)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

void BM_modular_check(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(modular_check(3, 4, std::complex<double>(0.0, 1.0), order));
  }
}
BENCHMARK(BM_modular_check)->Arg(500)->Arg(1000);

void BM_evaluate(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const QExpansion series = invert(euler_product(order, 1));
  const std::complex<double> tau(0.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_with_error(series, tau));
  }
}
BENCHMARK(BM_evaluate)->Arg(1000)->Arg(4000);

}  // namespace

BENCHMARK_MAIN();
