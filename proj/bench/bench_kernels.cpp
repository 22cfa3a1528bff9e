// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "hydromom/grid.hpp"
#include "hydromom/oracle.hpp"
#include "hydromom/paraboloidal.hpp"
#include "hydromom/spherical.hpp"

using namespace hydromom;

namespace {

GridSpec grid_of(benchmark::State& st) { return GridSpec{-3.0, 3.0, static_cast<int>(st.range(0))}; }

const auto& parab() {
  static const auto wf = parabolic::wavefunction_parabolic(parabolic::parabolic_numbers(2, 1, 1));
  return wf;
}

const auto& spher() {
  static const auto wf = spherical::wavefunction_spherical(spherical::make_state(4, 2, 1));
  return wf;
}

void BM_grid_parab_serial(benchmark::State& st) {
  const auto g = grid_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_grid_serial(parab(), g));
  st.SetItemsProcessed(st.iterations() * g.steps * g.steps);
}

void BM_grid_parab_omp(benchmark::State& st) {
  const auto g = grid_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_grid(parab(), g));
  st.SetItemsProcessed(st.iterations() * g.steps * g.steps);
}

void BM_grid_spherical_serial(benchmark::State& st) {
  const auto g = grid_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_grid_serial(spher(), g));
  st.SetItemsProcessed(st.iterations() * g.steps * g.steps);
}

void BM_grid_spherical_omp(benchmark::State& st) {
  const auto g = grid_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_grid(spher(), g));
  st.SetItemsProcessed(st.iterations() * g.steps * g.steps);
}

std::vector<double> momenta(benchmark::State& st) {
  std::vector<double> ps(static_cast<std::size_t>(st.range(0)));
  for (std::size_t k = 0; k < ps.size(); ++k) ps[k] = -3.0 + 6.0 * k / (ps.size() - 1);
  return ps;
}

void BM_transform_serial(benchmark::State& st) {
  const auto f = oracle::radial_samples(3, 1, 1.0);
  const auto ps = momenta(st);
  for (auto _ : st) benchmark::DoNotOptimize(oracle::conjugate_transform_serial(f, -1, ps));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(ps.size()));
}

void BM_transform_omp(benchmark::State& st) {
  const auto f = oracle::radial_samples(3, 1, 1.0);
  const auto ps = momenta(st);
  for (auto _ : st) benchmark::DoNotOptimize(oracle::conjugate_transform(f, -1, ps));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(ps.size()));
}

}  // namespace

BENCHMARK(BM_grid_parab_serial)->Arg(61)->Arg(201);
BENCHMARK(BM_grid_parab_omp)->Arg(61)->Arg(201);
BENCHMARK(BM_grid_spherical_serial)->Arg(61)->Arg(201);
BENCHMARK(BM_grid_spherical_omp)->Arg(61)->Arg(201);
BENCHMARK(BM_transform_serial)->Arg(61)->Arg(401);
BENCHMARK(BM_transform_omp)->Arg(61)->Arg(401);

BENCHMARK_MAIN();
