#include <benchmark/benchmark.h>

#include "reslab/arith.hpp"
#include "reslab/chain.hpp"
#include "reslab/residues.hpp"
#include "reslab/verify.hpp"

namespace {

void BM_ResidueProduct(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(reslab::residue_product(m));
}
BENCHMARK(BM_ResidueProduct)->Arg(300)->Arg(3000)->Arg(30000);

void BM_ShiftedProduct(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(reslab::shifted_residue_product(7, m));
}
BENCHMARK(BM_ShiftedProduct)->Arg(300)->Arg(3000)->Arg(30000);

void BM_PredictShiftedProduct(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(reslab::predict_shifted_product(6, m));
}
BENCHMARK(BM_PredictShiftedProduct)->Arg(300)->Arg(3000)->Arg(30000);

void BM_Factorize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reslab::factorize(999'999'999'989LL));
}
BENCHMARK(BM_Factorize);

void BM_EulerChain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reslab::euler_chain(720720, 1 << 20));
}
BENCHMARK(BM_EulerChain);

void BM_ScanGauss(benchmark::State& state) {
  reslab::ScanRequest req;
  req.theorem = reslab::TheoremId::Gauss;
  req.m_range = {2, state.range(0)};
  req.workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const reslab::ScanResult result = reslab::scan(req);
    benchmark::DoNotOptimize(result.total_cases);
  }
}
BENCHMARK(BM_ScanGauss)->Args({1000, 1})->Args({1000, 4})->Args({3000, 1})->Args({3000, 4});

void BM_ScanLagrange(benchmark::State& state) {
  reslab::ScanRequest req;
  req.theorem = reslab::TheoremId::LagrangeExt;
  req.m_range = {2, state.range(0)};
  req.workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const reslab::ScanResult result = reslab::scan(req);
    benchmark::DoNotOptimize(result.total_cases);
  }
}
BENCHMARK(BM_ScanLagrange)->Args({100, 1})->Args({100, 4});

}  // namespace

BENCHMARK_MAIN();
