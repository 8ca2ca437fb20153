#include <benchmark/benchmark.h>

#include "fidzero/fidelity.hpp"
#include "fidzero/scan.hpp"
#include "fidzero/spectrum.hpp"

namespace {

using namespace fidzero;

void BM_eig2x2(benchmark::State& state) {
  const DVector d{Complex(0.1, 0.0), Complex(0.3, 0.2), Complex(-0.4, 0.1),
                  Complex(0.7, -0.3)};
  for (auto _ : state) {
    auto sol = eig2x2(d);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_eig2x2);

void BM_mode_fidelity(benchmark::State& state) {
  const ModelSpec model = ModelSpec::kitaev();
  const Momentum k{1.1, 0.0};
  for (auto _ : state) {
    double f = mode_fidelity(model, k, Complex(0.495, 0.895),
                             Complex(0.505, 0.905), Strictness::lenient);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_mode_fidelity);

void BM_f_min_kitaev_L16(benchmark::State& state) {
  const ModelSpec model = ModelSpec::kitaev();
  const MomentumGrid grid = momentum_grid(model, 16);
  for (auto _ : state) {
    auto r = f_min(model, grid, Complex(0.5, 0.9), kDefaultDisplacement,
                   Strictness::lenient);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_f_min_kitaev_L16);

void BM_e_min_kitaev(benchmark::State& state) {
  const ModelSpec model = ModelSpec::kitaev();
  for (auto _ : state) {
    auto r = e_min(model, Complex(0.5, 0.9));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_e_min_kitaev);

void BM_e_min_qwz(benchmark::State& state) {
  const ModelSpec model = ModelSpec::qwz();
  for (auto _ : state) {
    auto r = e_min(model, Complex(1.0, 0.4));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_e_min_qwz);

void BM_scan_kitaev_32x8(benchmark::State& state) {
  ScanConfig config;
  config.model = ModelSpec::kitaev();
  config.size_l = 16;
  config.n_re = 32;
  config.n_im = 8;
  config.threads = 1;
  for (auto _ : state) {
    auto r = run_plane_scan(config);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_scan_kitaev_32x8);

}  // namespace

BENCHMARK_MAIN();
