// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "zap/kernels.hpp"
#include "zap/moments.hpp"

namespace {

using zap::Exec;

std::vector<double> heights(std::size_t n, double lo) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = lo + 0.731 * static_cast<double>(i);
  return t;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_ZetaValues(benchmark::State& state) {
  const auto taus = heights(4096, 2000.0);
  const zap::ZetaEngineConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(zap::zeta_values(taus, cfg, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(taus.size()));
}

void BM_PolyValues(benchmark::State& state) {
  const auto taus = heights(4096, 2000.0);
  const auto mol = zap::mollifier_coeffs(1e7, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(zap::poly_values(taus, mol.poly, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(taus.size()));
}

void BM_ContinuousMoment(benchmark::State& state) {
  const zap::SmoothWindow w;
  const auto spec = zap::ProgressionSpec::from_alpha(1.0);
  const auto mol = zap::mollifier_coeffs(2000.0, 0.3);
  zap::MomentOptions opt;
  opt.exec = exec_of(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(zap::continuous_twisted_moment(spec, w, 2000.0, mol.poly, 2, opt));
}

}  // namespace

BENCHMARK(BM_ZetaValues)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolyValues)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContinuousMoment)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
