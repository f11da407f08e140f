#include <algorithm>

#include <benchmark/benchmark.h>

#include "weylq/basis.hpp"
#include "weylq/invariants.hpp"
#include "weylq/mcg.hpp"
#include "weylq/theta.hpp"
#include "weylq/weyl.hpp"

using namespace weylq;

static void BM_ZetaDefn(benchmark::State& state) {
  const Level lvl{static_cast<int>(state.range(0))};
  const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
  const cplx z{0.37, 0.41};
  for (auto _ : state) benchmark::DoNotOptimize(zeta_defn(1, z, lvl, spec));
}
BENCHMARK(BM_ZetaDefn)->Arg(3)->Arg(8)->Arg(16);

static void BM_ZetaGauss(benchmark::State& state) {
  const Level lvl{static_cast<int>(state.range(0))};
  const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
  const cplx z{0.37, 0.41};
  for (auto _ : state) benchmark::DoNotOptimize(zeta_gauss(1, z, lvl, spec));
}
BENCHMARK(BM_ZetaGauss)->Arg(3)->Arg(8)->Arg(16);

static void BM_GramMatrix(benchmark::State& state) {
  const Level lvl{static_cast<int>(state.range(0))};
  const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(lvl, spec));
}
BENCHMARK(BM_GramMatrix)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ReproducingKernel(benchmark::State& state) {
  const Level lvl{static_cast<int>(state.range(0))};
  const QuadratureSpec spec = QuadratureSpec::defaults(lvl);
  for (auto _ : state) benchmark::DoNotOptimize(reproducing_kernel({0.2, 0.3}, {0.6, 0.1}, lvl, spec));
}
BENCHMARK(BM_ReproducingKernel)->Arg(4)->Arg(8);

static void BM_Spectrum(benchmark::State& state) {
  const Level lvl{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(2, 3, lvl));
}
BENCHMARK(BM_Spectrum)->Arg(5)->Arg(16)->Arg(32);

static void BM_ReconstructS(benchmark::State& state) {
  const Level lvl{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_S(lvl));
}
BENCHMARK(BM_ReconstructS)->Arg(10)->Arg(32);

static void BM_CompatibilitySweep(benchmark::State& state) {
  const Level lvl{static_cast<int>(state.range(0))};
  const int r = lvl.r();
  for (auto _ : state) {
    double worst = 0.0;
    for (int p = -2 * r; p <= 2 * r; ++p) {
      for (int q = -2 * r; q <= 2 * r; ++q) worst = std::max(worst, compatibility_check(p, q, lvl).max());
    }
    benchmark::DoNotOptimize(worst);
  }
}
BENCHMARK(BM_CompatibilitySweep)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_TorusCoefficient(benchmark::State& state) {
  const Level lvl{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(torus_coeff_Cn(3, 2, 5, lvl));
}
BENCHMARK(BM_TorusCoefficient)->Arg(7)->Arg(16);

static void BM_Spanning(benchmark::State& state) {
  const Level lvl{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(verify_spanning(lvl));
}
BENCHMARK(BM_Spanning)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
