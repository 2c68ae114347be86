// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "xc01/constructions.hpp"
#include "xc01/equivalence.hpp"
#include "xc01/lower_bounds.hpp"
#include "xc01/pipeline.hpp"

using namespace xc01;

namespace {

const Catalog& catalog() {
  static const Catalog cat = build_catalog(4);
  return cat;
}

void BM_CanonicalSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(canonical_ids_serial(4));
}

void BM_CanonicalParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_ids_parallel(4));
}

void BM_Fixpoint(benchmark::State& state) {
  const bool parallel = state.range(0) > 0;
  if (parallel) omp_set_num_threads(static_cast<int>(state.range(0)));
  const Catalog& cat = catalog();
  for (auto _ : state) benchmark::DoNotOptimize(fixpoint_upper_bounds(cat, parallel));
}

// Lower bounds of all dimension-3 and dimension-4 classes.
void BM_ClassBounds(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const auto& classes = catalog().classes;
  std::vector<SlackMatrix> slacks;
  for (const auto& c : classes)
    if (c.dim >= 3) slacks.push_back(class_slack_matrix(c));
  const int n = static_cast<int>(slacks.size());
  std::vector<LowerBounds> out(n);
  if (threads > 0) omp_set_num_threads(threads);
  for (auto _ : state) {
#pragma omp parallel for schedule(dynamic, 1) if (threads > 0)
    for (int k = 0; k < n; ++k) out[k] = compute_lower_bounds(slacks[k]);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_CanonicalSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonicalParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fixpoint)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassBounds)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
