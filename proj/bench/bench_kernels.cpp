// Serial reference loops against the OpenMP loops for the grid kernels.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "numrad/kernels.hpp"
#include "numrad/numrange.hpp"
#include "numrad/oracle.hpp"
#include "numrad/parallel.hpp"

namespace {

using numrad::CMatrix;
using numrad::CVector;
using numrad::Exec;

CMatrix seeded_matrix(std::size_t n, std::uint64_t seed) {
  numrad::NormalSource src(seed);
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = src.complex_normal();
  }
  return m;
}

Exec exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Exec::serial : Exec::parallel;
}

void set_label(benchmark::State& state) {
  state.SetLabel(state.range(1) == 0 ? "serial"
                                     : "omp x" + std::to_string(numrad::kernel_threads()));
}

void BM_SupportSweep(benchmark::State& state) {
  const numrad::HermitianPencil pencil(seeded_matrix(static_cast<std::size_t>(state.range(0)), 1));
  std::vector<double> out(512);
  for (auto _ : state) {
    numrad::support_sweep(exec_of(state), pencil, out);
    benchmark::DoNotOptimize(out.data());
  }
  set_label(state);
}
BENCHMARK(BM_SupportSweep)->ArgsProduct({{2, 4, 8, 16}, {0, 1}});

void BM_RadiusPhaseSweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CMatrix a = seeded_matrix(n, 2);
  const CMatrix b = seeded_matrix(n, 3);
  std::vector<double> out(512);
  for (auto _ : state) {
    numrad::radius_phase_sweep(exec_of(state), a, b, 64, out);
    benchmark::DoNotOptimize(out.data());
  }
  set_label(state);
}
BENCHMARK(BM_RadiusPhaseSweep)->ArgsProduct({{2, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_NumericalRadius(benchmark::State& state) {
  const CMatrix a = seeded_matrix(static_cast<std::size_t>(state.range(0)), 4);
  numrad::RadiusOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(numrad::numerical_radius(a, 1e-10, opts).omega);
  set_label(state);
}
BENCHMARK(BM_NumericalRadius)->ArgsProduct({{2, 4, 8}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_OmegaParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CMatrix a = seeded_matrix(n, 5);
  const CMatrix b = seeded_matrix(n, 6);
  numrad::ParallelOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(numrad::omega_parallel(a, b, opts).certificate.achieved);
  set_label(state);
}
BENCHMARK(BM_OmegaParallel)->ArgsProduct({{2, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_OracleSampling(benchmark::State& state) {
  const CMatrix a = seeded_matrix(static_cast<std::size_t>(state.range(0)), 7);
  const auto objective = [&](const CVector& x) { return std::abs(numrad::quadratic_form(a, x)); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(numrad::sphere_maximize(objective, a.dim(), 5000, 42, exec_of(state)));
  }
  set_label(state);
}
BENCHMARK(BM_OracleSampling)->ArgsProduct({{2, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
