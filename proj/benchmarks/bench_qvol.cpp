#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "qvol/coloring.hpp"
#include "qvol/complexmath.hpp"
#include "qvol/pipeline.hpp"
#include "qvol/potential.hpp"
#include "qvol/solution.hpp"
#include "qvol/triangulation.hpp"

namespace {

using qvol::Complex;

void BM_li2_sweep(benchmark::State& state) {
  // Arguments across all algorithm regions: series, reflection, inversion,
  // log-argument series, below-cut reals.
  const std::vector<Complex> args = {
      {0.1, 0.2},  {0.45, -0.1}, {0.9, 0.05},  {1.02, 0.3}, {-3.0, 1.5},
      {2.0, 0.0},  {0.5, 0.8},   {-0.7, -0.6}, {7.5, 0.0},  {0.0, 1.0},
      {1.5, -2.5}, {0.99, 0.0}};
  for (auto _ : state) {
    Complex acc{};
    for (const Complex& z : args) acc += qvol::li2(z);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_li2_sweep);

void BM_run_job_fig8(benchmark::State& state) {
  const qvol::JobSpec job = qvol::builtin_example("fig8_minus");
  for (auto _ : state) {
    const auto rep = qvol::run_job(job);
    benchmark::DoNotOptimize(rep.vol);
  }
}
BENCHMARK(BM_run_job_fig8);

void BM_run_job_trefoil_cross_check(benchmark::State& state) {
  qvol::JobSpec job = qvol::builtin_example("trefoil");
  job.cross_check = true;
  for (auto _ : state) {
    const auto rep = qvol::run_job(job);
    benchmark::DoNotOptimize(rep.cs_mod_pi2);
  }
}
BENCHMARK(BM_run_job_trefoil_cross_check);

void BM_triangulation_total(benchmark::State& state) {
  const qvol::JobSpec job = qvol::builtin_example("fig8_minus");
  const auto d = qvol::build_diagram(job.pd);
  const qvol::ShadowColoring s{job.arc_colors, *job.region_colors, *job.p};
  for (auto _ : state) {
    const auto tets = qvol::build_tetrahedra(d, s);
    const auto classes = qvol::build_edge_classes(tets, d);
    benchmark::DoNotOptimize(qvol::total_complex_volume(tets, classes));
  }
}
BENCHMARK(BM_triangulation_total);

void BM_coloring_search(benchmark::State& state) {
  const qvol::JobSpec job = qvol::builtin_example("fig8_minus");
  const auto d = qvol::build_diagram(job.pd);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const auto s = qvol::find_generic_coloring(d, job.arc_colors, seed++);
    benchmark::DoNotOptimize(s.region_colors.size());
  }
}
BENCHMARK(BM_coloring_search);

}  // namespace

BENCHMARK_MAIN();
