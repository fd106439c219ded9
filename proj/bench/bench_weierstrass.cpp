// Serial reference vs OpenMP kernels on z^n - 1 with starts near the unit circle.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dkcert/solver.hpp"
#include "dkcert/weierstrass.hpp"

namespace {

using dkcert::Complex;

struct Setup {
  dkcert::Polynomial poly;
  std::vector<Complex> z;
};

Setup make_setup(std::size_t n) {
  std::vector<Complex> coeffs(n, 0.0);
  coeffs[0] = -1.0;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.3) / static_cast<double>(n);
    z[k] = std::polar(1.05, t);
  }
  return {dkcert::Polynomial::from_coefficients(coeffs, 1.0, n), std::move(z)};
}

void BM_CorrectionSerial(benchmark::State& state) {
  const auto s = make_setup(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dkcert::serial::weierstrass_correction(s.poly, s.z));
  state.SetComplexityN(state.range(0));
}

void BM_CorrectionParallel(benchmark::State& state) {
  const auto s = make_setup(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dkcert::weierstrass_correction(s.poly, s.z));
  state.SetComplexityN(state.range(0));
}

void BM_DistancesSerial(benchmark::State& state) {
  const auto s = make_setup(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dkcert::serial::distances(s.z));
}

void BM_DistancesParallel(benchmark::State& state) {
  const auto s = make_setup(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dkcert::distances(s.z));
}

void BM_Solve(benchmark::State& state) {
  const auto s = make_setup(static_cast<std::size_t>(state.range(0)));
  dkcert::SolverOptions opts;
  opts.tol_e = 1e-10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dkcert::run_weierstrass(s.poly, dkcert::PointVector(s.z), opts));
  }
}

}  // namespace

BENCHMARK(BM_CorrectionSerial)->RangeMultiplier(4)->Range(16, 1024)->Complexity();
BENCHMARK(BM_CorrectionParallel)->RangeMultiplier(4)->Range(16, 1024)->Complexity();
BENCHMARK(BM_DistancesSerial)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_DistancesParallel)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_Solve)->Arg(20)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
