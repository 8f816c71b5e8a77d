#include <benchmark/benchmark.h>

#include "bezout/backends.hpp"
#include "bezout/harness.hpp"
#include "bezout/regions.hpp"
#include "bezout/roots.hpp"
#include "bezout/separation.hpp"
#include "bezout/sylvester.hpp"

using namespace bezout;

namespace {

// Pairs of equal degree n from the certification ensemble, skipping near-common roots.
std::pair<Polynomial, Polynomial> pair_of_degree(int n) {
  for (std::uint64_t i = 0;; ++i) {
    auto [A, B] = ensemble_pair(7, i, n, n);
    const RootSet ra = find_roots(A), rb = find_roots(B);
    if (ra.all_simple() && rb.all_simple() && delta_value(A, B, ra, rb).value >= 0.05) return {A, B};
  }
}

}  // namespace

static void BM_FindRoots(benchmark::State& state) {
  const Polynomial A = pair_of_degree(static_cast<int>(state.range(0))).first;
  for (auto _ : state) benchmark::DoNotOptimize(find_roots(A));
}
BENCHMARK(BM_FindRoots)->DenseRange(2, 12, 2);

static void BM_SylvesterSolve(benchmark::State& state) {
  const auto [A, B] = pair_of_degree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_rhs(build_sylvester(A, B), Polynomial{1.0}));
}
BENCHMARK(BM_SylvesterSolve)->DenseRange(2, 12, 2);

static void BM_InverseNorm(benchmark::State& state) {
  const auto [A, B] = pair_of_degree(static_cast<int>(state.range(0)));
  const double d = delta_value(A, B, find_roots(A), find_roots(B)).value;
  for (auto _ : state) benchmark::DoNotOptimize(inverse_norm_report(A, B, d));
}
BENCHMARK(BM_InverseNorm)->DenseRange(2, 12, 2);

static void BM_Residue(benchmark::State& state) {
  const auto [A, B] = pair_of_degree(static_cast<int>(state.range(0)));
  const RootSet ra = find_roots(A), rb = find_roots(B);
  for (auto _ : state) benchmark::DoNotOptimize(solve_residue(A, B, ra, rb, Polynomial{1.0}));
}
BENCHMARK(BM_Residue)->DenseRange(2, 12, 2);

static void BM_BuildRegion(benchmark::State& state) {
  const auto [A, B] = pair_of_degree(static_cast<int>(state.range(0)));
  const RegionSpec spec = make_region_spec(RegionKind::EA, find_roots(A), find_roots(B), false, true);
  for (auto _ : state) benchmark::DoNotOptimize(build_region(spec));
}
BENCHMARK(BM_BuildRegion)->DenseRange(2, 6, 1);

static void BM_Quadrature(benchmark::State& state) {
  const auto [A, B] = pair_of_degree(static_cast<int>(state.range(0)));
  const RootSet ra = find_roots(A), rb = find_roots(B);
  const ContourPair contours = default_contours(ra, rb);
  for (auto _ : state) benchmark::DoNotOptimize(solve_quadrature(A, B, ra, rb, contours, Polynomial{1.0}));
}
BENCHMARK(BM_Quadrature)->DenseRange(2, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_DeltaTilde(benchmark::State& state) {
  const auto [A, B] = pair_of_degree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(delta_tilde(A, B));
}
BENCHMARK(BM_DeltaTilde)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
