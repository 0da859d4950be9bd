#include <benchmark/benchmark.h>

#include "tropsurf/sweep.hpp"

using namespace tropsurf;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void BM_MatroidSweep(benchmark::State& st) {
  static const std::vector<Matroid> ms = library_matroids(6);
  for (auto _ : st) benchmark::DoNotOptimize(matroid_sweep(ms, mode(st)));
  st.SetItemsProcessed(st.iterations() * static_cast<long long>(ms.size()));
  label(st);
}

void BM_BezoutSweep(benchmark::State& st) {
  static const std::vector<FanPlane> fans = [] {
    std::vector<FanPlane> out;
    for (int n = 3; n <= 5; ++n)
      for (const Matroid& m : simple_rank3_matroids(n)) out.push_back(build_fan(m, standard_basis(n - 1)));
    return out;
  }();
  for (auto _ : st) benchmark::DoNotOptimize(bezout_sweep(fans, 20, 2024, mode(st)));
  st.SetItemsProcessed(st.iterations() * static_cast<long long>(fans.size()) * 20);
  label(st);
}

void BM_NoetherSweep(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(noether_sweep(100, 31337, mode(st)));
  st.SetItemsProcessed(st.iterations() * 100);
  label(st);
}

}  // namespace

BENCHMARK(BM_MatroidSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BezoutSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NoetherSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
