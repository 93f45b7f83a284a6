#include <benchmark/benchmark.h>

#include <eulerstab/families.hpp>
#include <eulerstab/motzkin.hpp>
#include <eulerstab/stability.hpp>

using namespace eulerstab;

namespace {

void BM_BruteForceA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MPoly p = brute_force({Family::A, n, 2, QMode::None, 0});
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_BruteForceA)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_BruteForceBSymbolic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MPoly p = brute_force({Family::B, n, 2, QMode::SingleSymbolic, 0});
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_BruteForceBSymbolic)->Arg(4)->Arg(5)->Arg(6)
    ->Unit(benchmark::kMillisecond);

void BM_RecurrenceA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MPoly p = rec_a(n);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_RecurrenceA)->Arg(8)->Arg(10)->Arg(12)
    ->Unit(benchmark::kMillisecond);

void BM_RecurrenceBSymbolic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MPoly p = rec_g(n, 2, QMode::SingleSymbolic);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_RecurrenceBSymbolic)->Arg(6)->Arg(8)
    ->Unit(benchmark::kMillisecond);

void BM_ChowRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    UPoly p = chow_d(n);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_ChowRecurrence)->Arg(10)->Arg(20)->Arg(40);

void BM_Sturm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  UPoly p = univariate(rec_a(n));
  for (auto _ : state) {
    SturmReport r = sturm(p);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Sturm)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_PathCensusB(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CensusRow row = catalan_census(Family::B, n);
    benchmark::DoNotOptimize(row);
  }
}
BENCHMARK(BM_PathCensusB)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_HalfplaneProbe(benchmark::State& state) {
  MPoly p = affine_b(4);
  for (auto _ : state) {
    FalsifyOptions opts;
    opts.budget = 10000;
    auto w = falsify_halfplane(p, opts);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_HalfplaneProbe)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
