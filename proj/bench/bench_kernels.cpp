// Serial reference kernels against their OpenMP counterparts. LCH_THREADS caps the team size.
#include <benchmark/benchmark.h>

#include <vector>

#include "lch/harness.hpp"
#include "lch/inradius.hpp"
#include "lch/kernels.hpp"

namespace {

const lch::BallPolytope3& body() {
  static const lch::BallPolytope3 k = lch::random_polytope(lch::GenSpec{7, 8, 0.45, 1.0, 3, 0.0});
  return k;
}

std::vector<double> depths(int n) {
  const double r = lch::inscribed_ball(body()).radius;
  std::vector<double> ts;
  for (int i = 0; i < n; ++i) ts.push_back(r * i / n);
  return ts;
}

void BM_mc_volume_serial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(lch::kernels::serial::mc_volume(body(), s.range(0), 11).hits);
  s.SetItemsProcessed(s.iterations() * s.range(0));
}
void BM_mc_volume_omp(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(lch::kernels::omp::mc_volume(body(), s.range(0), 11).hits);
  s.SetItemsProcessed(s.iterations() * s.range(0));
}

void BM_erosion_serial(benchmark::State& s) {
  const auto ts = depths(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(lch::kernels::serial::sample_erosion(body(), ts).size());
}
void BM_erosion_omp(benchmark::State& s) {
  const auto ts = depths(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(lch::kernels::omp::sample_erosion(body(), ts).size());
}

void trial(std::size_t i) {
  lch::GenSpec g{1000 + i, 6, 0.4, 1.0, 3, 0.0};
  benchmark::DoNotOptimize(lch::random_polytope(g).volume());
}
void BM_trials_serial(benchmark::State& s) {
  for (auto _ : s) lch::kernels::serial::map_trials(static_cast<std::size_t>(s.range(0)), trial);
}
void BM_trials_omp(benchmark::State& s) {
  for (auto _ : s) lch::kernels::omp::map_trials(static_cast<std::size_t>(s.range(0)), trial);
}

}  // namespace

BENCHMARK(BM_mc_volume_serial)->Arg(1 << 18)->Arg(1 << 21)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mc_volume_omp)->Arg(1 << 18)->Arg(1 << 21)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_erosion_serial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_erosion_omp)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trials_serial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trials_omp)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
