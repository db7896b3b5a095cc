#include <benchmark/benchmark.h>

#include "curvecert/batch/batch.hpp"

namespace {

using namespace curvecert;

const std::vector<int> kN = {1, 2, 3, 4, 5, 6};

void BM_VerifyAllSerial(benchmark::State& state) {
  const auto certs = certify::builtin_certificates(kN);
  for (auto _ : state) benchmark::DoNotOptimize(batch::verify_all_serial(certs, algebra::Window{}, 0));
}

void BM_VerifyAllParallel(benchmark::State& state) {
  const auto certs = certify::builtin_certificates(kN);
  for (auto _ : state) benchmark::DoNotOptimize(batch::verify_all(certs, algebra::Window{}, 0));
}

void BM_Table2Serial(benchmark::State& state) {
  const auto cat = catalog::Catalog::reference(kN, algebra::Window{});
  const auto rows = catalog::catalog_modules(kN);
  for (auto _ : state) benchmark::DoNotOptimize(batch::table2_serial(rows, cat, 0));
}

void BM_Table2Parallel(benchmark::State& state) {
  const auto cat = catalog::Catalog::reference(kN, algebra::Window{});
  const auto rows = catalog::catalog_modules(kN);
  for (auto _ : state) benchmark::DoNotOptimize(batch::table2(rows, cat, 0));
}

BENCHMARK(BM_VerifyAllSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyAllParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Table2Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Table2Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
