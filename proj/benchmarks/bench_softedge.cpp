#include <benchmark/benchmark.h>

#include <vector>

#include "softedge/airy.hpp"
#include "softedge/kernels.hpp"
#include "softedge/lpp.hpp"
#include "softedge/nystrom.hpp"
#include "softedge/painleve.hpp"
#include "softedge/quadrature.hpp"
#include "softedge/samplers.hpp"

using namespace softedge;

static void BM_AirySeries(benchmark::State& state) {
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::airy(x).ai);
    x = (x < 6.0) ? x + 0.1 : -3.0;
  }
}
BENCHMARK(BM_AirySeries);

static void BM_AiryBridge(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::airy(-9.25).ai);
}
BENCHMARK(BM_AiryBridge);

static void BM_AiryKernel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::airy_kernel(-1.3, 0.7));
}
BENCHMARK(BM_AiryKernel);

static void BM_FiniteKernelN400(benchmark::State& state) {
  const auto spec = kernels::KernelSpec::finite_gue(400);
  const auto sc = kernels::canonical_scaling(spec);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::finite_kernel_scaled(spec, sc, -0.5, 0.5));
}
BENCHMARK(BM_FiniteKernelN400);

// One Fredholm determinant evaluation at the quadrature order used in
// production curves.
static void BM_FredholmDet(benchmark::State& state) {
  const auto spec = kernels::KernelSpec::airy();
  const auto rule = fredholm::build_rule(-2.0, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(fredholm::fredholm_det(spec, 1.0, -2.0, rule).value);
}
BENCHMARK(BM_FredholmDet)->Arg(48)->Arg(96);

// Full Painleve solve: sigma0 boundary-value integration down to y = -10.
static void BM_PainleveSolve(benchmark::State& state) {
  for (auto _ : state) {
    auto sol = painleve::solve_sigma0(1.0);
    benchmark::DoNotOptimize(sol.y_min());
  }
}
BENCHMARK(BM_PainleveSolve);

// Largest-eigenvalue samplers, one sample per iteration.
static void BM_GueSample(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto b = simulate::sample_gue_max(N, 1, seed++, 1.0, simulate::Scaling::Edge, 1);
    benchmark::DoNotOptimize(b.values);
  }
}
BENCHMARK(BM_GueSample)->Arg(50)->Arg(200);

static void BM_WignerSample(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto b = simulate::sample_wigner4_max(N, 1, seed++, simulate::Scaling::CC, 1);
    benchmark::DoNotOptimize(b.values);
  }
}
BENCHMARK(BM_WignerSample)->Arg(50);

static void BM_LppSample(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto b = simulate::lpp_sample({32, 48}, 1, seed++, simulate::Scaling::Edge, 1);
    benchmark::DoNotOptimize(b.values);
  }
}
BENCHMARK(BM_LppSample);

BENCHMARK_MAIN();
