#include <benchmark/benchmark.h>

#include "lkt3/diagram.hpp"
#include "lkt3/front.hpp"
#include "lkt3/generators.hpp"
#include "lkt3/invariants.hpp"
#include "lkt3/seifert.hpp"

using namespace lkt3;

namespace {

LegendrianCurve knot(int samples) {
  QuasilinearSpec s;
  s.p = 1, s.q = 1, s.r = 2, s.n = 3, s.samples = samples;
  return quasilinear(s);
}

void BM_Quasilinear(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(knot(int(st.range(0))));
}
BENCHMARK(BM_Quasilinear)->RangeMultiplier(2)->Range(128, 2048);

void BM_CrossingsXY(benchmark::State& st) {
  const LegendrianCurve c = knot(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(find_crossings(c, Plane::XY));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_CrossingsXY)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

void BM_CrossingsXZ(benchmark::State& st) {
  const LegendrianCurve c = knot(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(find_crossings(c, Plane::XZ));
}
BENCHMARK(BM_CrossingsXZ)->RangeMultiplier(2)->Range(256, 2048);

void BM_FrontRoundTrip(benchmark::State& st) {
  const LegendrianCurve c = knot(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(reconstruct_from_front(extract_front(c), c.contact));
}
BENCHMARK(BM_FrontRoundTrip)->Arg(512);

void BM_Report(benchmark::State& st) {
  const LegendrianCurve c = knot(int(st.range(0)));
  ReportOptions o;
  o.oracle = true;
  for (auto _ : st) benchmark::DoNotOptimize(compute_report(c, o));
}
BENCHMARK(BM_Report)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_SeifertCensus(benchmark::State& st) {
  const LegendrianCurve c = knot(512);
  RunConfig cfg;
  cfg.threads = 1;
  for (auto _ : st) benchmark::DoNotOptimize(seifert_census(c, cfg));
}
BENCHMARK(BM_SeifertCensus)->Unit(benchmark::kMillisecond);

void BM_Perturb(benchmark::State& st) {
  const LegendrianCurve c = knot(512);
  std::uint64_t seed = 1;
  for (auto _ : st) benchmark::DoNotOptimize(perturb_front(c, seed++, 1e-3));
}
BENCHMARK(BM_Perturb)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
