// Serial reference against the OpenMP kernels for full-group scans.

#include "mobius3/pgl.hpp"
#include "mobius3/scan.hpp"

#include <benchmark/benchmark.h>

using namespace mobius3;

namespace {

ScanOptions options(const benchmark::State& state) {
  return state.range(1) == 0 ? ScanOptions{ScanMode::Serial, 1} : ScanOptions{ScanMode::Parallel, 0};
}

void BM_Normalizer(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  Pgl3 ctx(q);
  const SubgroupRec h = maximal_subgroup(ctx, MaximalKind::SingerNorm);
  const ScanOptions opt = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(normalizer_order(ctx, GroupKind::PSL, h, opt));
  state.SetLabel(opt.mode == ScanMode::Serial ? "serial" : "parallel");
}

void BM_Transporter(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  Pgl3 ctx(q);
  const SubgroupRec h = closure(ctx, {elementary(0, 2, 1)}, 16);
  const SubgroupRec k = maximal_subgroup(ctx, MaximalKind::PointStab);
  const ScanOptions opt = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(transporter_counts(ctx, GroupKind::PSL, h, {&k}, opt));
  state.SetLabel(opt.mode == ScanMode::Serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_Normalizer)->ArgsProduct({{4, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Transporter)->ArgsProduct({{4, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
