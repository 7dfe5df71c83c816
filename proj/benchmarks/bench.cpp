#include <benchmark/benchmark.h>

#include "schubert/pieri.hpp"
#include "schubert/schubert_schur.hpp"
#include "schubert/structure_constants.hpp"

namespace {

using schubert::Partition;
using schubert::Permutation;

void BM_SchubertLongest(benchmark::State &state) {
  const auto w0 = Permutation::longest(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    schubert::SchubertTable table;
    for (const auto &w : {w0, Permutation({2, 5, 1, 4, 3}), Permutation({1, 3, 5, 2, 4, 6})})
      benchmark::DoNotOptimize(table.get(w));
    state.counters["entries"] = static_cast<double>(table.size());
  }
}
BENCHMARK(BM_SchubertLongest)->DenseRange(4, 6);

void BM_PieriExpand(benchmark::State &state) {
  const Permutation w({6, 5, 4, 3, 2, 1, 11, 10, 9, 8, 7});
  for (auto _ : state)
    benchmark::DoNotOptimize(schubert::pieri_expand(w, static_cast<int>(state.range(0)), 6));
}
BENCHMARK(BM_PieriExpand)->DenseRange(1, 4);

void BM_TwoRowSevenTerm(benchmark::State &state) {
  const Permutation w({1, 2, 3, 5, 7, 4, 6});
  for (auto _ : state)
    benchmark::DoNotOptimize(schubert::lr_two_row(w, 5, Partition({2, 1})));
}
BENCHMARK(BM_TwoRowSevenTerm);

void BM_LargeCell(benchmark::State &state) {
  const Permutation w({6, 5, 4, 3, 2, 1, 11, 10, 9, 8, 7});
  for (auto _ : state)
    benchmark::DoNotOptimize(schubert::lr_two_row(w, 6, Partition({4, 3})));
}
BENCHMARK(BM_LargeCell)->Unit(benchmark::kMillisecond);

void BM_ConjectureScan(benchmark::State &state) {
  schubert::ScanOptions options;
  options.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        schubert::scan_conjecture(2, 5, std::nullopt, 4, schubert::WFilter::all, options));
}
BENCHMARK(BM_ConjectureScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
