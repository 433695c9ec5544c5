#include <benchmark/benchmark.h>

#include "teissier/hilbert.hpp"
#include "teissier/ideal.hpp"
#include "teissier/newton.hpp"

namespace {

using namespace teissier;

MonomialIdeal sample3() {
  return normalize(3, {{4, 0, 0}, {0, 5, 0}, {0, 0, 6}, {2, 1, 1}, {1, 3, 2}});
}

void BM_colength_sliced(benchmark::State& state) {
  MonomialIdeal I = power(sample3(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(colength(I));
}
BENCHMARK(BM_colength_sliced)->Arg(4)->Arg(16)->Arg(64);

void BM_colength_brute(benchmark::State& state) {
  MonomialIdeal I = power(sample3(), static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(colength(I, ColengthMode::BruteForce));
}
BENCHMARK(BM_colength_brute)->Arg(2)->Arg(3);

void BM_mixed_multiplicities(benchmark::State& state) {
  MonomialIdeal I = maximal_ideal(static_cast<int>(state.range(0)));
  MonomialIdeal J = power(I, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_multiplicities(I, J));
}
BENCHMARK(BM_mixed_multiplicities)->Arg(2)->Arg(3);

void BM_integral_closure(benchmark::State& state) {
  MonomialIdeal I = power(sample3(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(integral_closure(I));
}
BENCHMARK(BM_integral_closure)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
