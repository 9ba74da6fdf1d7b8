#include "witnesslab/bell.hpp"
#include "witnesslab/optimality.hpp"
#include "witnesslab/positivity.hpp"
#include "witnesslab/rng.hpp"
#include "witnesslab/witness.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

using namespace witnesslab;

namespace {
constexpr double kPi = std::numbers::pi;
}

static void BM_WitnessConstruction(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(family_witness({Family::ClassI, 1.1}));
}
BENCHMARK(BM_WitnessConstruction);

static void BM_Kron16(benchmark::State& state) {
  Rng rng(1);
  const Matrix a = [&] {
    Matrix m(4, 4);
    for (int i = 0; i < 16; ++i)
      m(i / 4, i % 4) = Complex(rng.gaussian(), rng.gaussian());
    return m;
  }();
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, a));
}
BENCHMARK(BM_Kron16);

static void BM_HermitianEigen16(benchmark::State& state) {
  const Matrix w = family_witness({Family::ClassI, 0.9});
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(w));
}
BENCHMARK(BM_HermitianEigen16);

static void BM_ContractFirst(benchmark::State& state) {
  const Matrix w = family_witness({Family::ClassII, 0.7});
  Rng rng(2);
  const Vector psi = rng.unit_complex(4);
  for (auto _ : state) benchmark::DoNotOptimize(contract_first(w, psi));
}
BENCHMARK(BM_ContractFirst);

static void BM_SeesawStart(benchmark::State& state) {
  const Matrix w = family_witness({Family::ClassI, kPi / 3});
  std::uint64_t seed = 1;
  for (auto _ : state) {
    SeesawOptions opts;
    opts.starts = 1;
    opts.max_iters = 60;
    opts.seed = seed++;
    benchmark::DoNotOptimize(seesaw_minimize(w, opts));
  }
}
BENCHMARK(BM_SeesawStart);

static void BM_SpanAnalysis(benchmark::State& state) {
  const auto family = zero_locus_families({Family::ClassI, kPi / 3}, true, 40, 3);
  for (auto _ : state) benchmark::DoNotOptimize(span_analysis(family, 1e-8));
}
BENCHMARK(BM_SpanAnalysis);

static void BM_ProbeDeterminant(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(classII_probe_determinant(
        kPi / 2, 1e-4, 0.1, std::sqrt(0.4), std::sqrt(0.6)));
}
BENCHMARK(BM_ProbeDeterminant);

static void BM_FactorizedDeterminant(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        classI_factorized_determinant(1.1, {0.4, 0.8, 0.3, 0.6}));
}
BENCHMARK(BM_FactorizedDeterminant);

BENCHMARK_MAIN();
