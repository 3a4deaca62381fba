#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "qkit/algorithms.hpp"
#include "qkit/qreg.hpp"
#include "qkit/z2.hpp"

namespace {

using namespace qkit;

void BM_ApplyHadamard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  QRegister reg(n);
  const Gate1 h = named_gate(GateName::H);
  for (auto _ : state) {
    apply_gate(reg, h, n / 2);
    benchmark::DoNotOptimize(reg.state.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(reg.dim()));
}
BENCHMARK(BM_ApplyHadamard)->Arg(10)->Arg(16)->Arg(20)->Arg(24);

void BM_ApplyCnot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  QRegister reg(n);
  apply_walsh_hadamard(reg, std::vector<int>{0, n - 1});
  for (auto _ : state) {
    apply_cnot(reg, 0, n - 1);
    benchmark::DoNotOptimize(reg.state.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(reg.dim()));
}
BENCHMARK(BM_ApplyCnot)->Arg(10)->Arg(16)->Arg(20)->Arg(24);

void BM_WalshHadamardAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  QRegister reg(n);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (auto _ : state) {
    apply_walsh_hadamard(reg, all);
    benchmark::DoNotOptimize(reg.state.data());
  }
}
BENCHMARK(BM_WalshHadamardAll)->Arg(10)->Arg(16)->Arg(20);

void BM_MeasureAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  for (auto _ : state) {
    QRegister reg(n);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    apply_walsh_hadamard(reg, all);
    benchmark::DoNotOptimize(measure_all(reg, rng).outcome.data());
  }
}
BENCHMARK(BM_MeasureAll)->Arg(10)->Arg(16)->Arg(20);

void BM_DeutschJozsa(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(42);
  const OracleSpec f = random_balanced_oracle(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(deutsch_jozsa(f).gate_count);
  }
}
BENCHMARK(BM_DeutschJozsa)->Arg(4)->Arg(10)->Arg(16);

void BM_Z2Census(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(z2::census_v2().reversible);
  }
}
BENCHMARK(BM_Z2Census);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
