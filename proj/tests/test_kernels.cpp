#include <doctest.h>

#include <atomic>
#include <vector>

#include "lch/harness.hpp"
#include "lch/kernels.hpp"

using namespace lch;

TEST_CASE("OpenMP Monte Carlo matches the serial reference bit for bit") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const BallPolytope3 k = random_polytope(GenSpec{seed, 5, 0.4, 1.0, 3, 0.0});
    for (std::uint64_t n : {1000u, 4096u, 50001u}) {
      const kernels::McCount a = kernels::serial::mc_volume(k, n, seed);
      const kernels::McCount b = kernels::omp::mc_volume(k, n, seed);
      CHECK(a.hits == b.hits);
      CHECK(a.samples == n);
      CHECK(b.samples == n);
      CHECK(a.box_lo == b.box_lo);
      CHECK(a.box_hi == b.box_hi);
    }
  }
}

TEST_CASE("OpenMP erosion sampling matches the serial reference") {
  const BallPolytope3 k = random_polytope(GenSpec{9, 7, 0.5, 1.0, 3, 0.0});
  std::vector<double> ts;
  for (int i = 0; i < 30; ++i) ts.push_back(0.49 * i / 30.0);
  const auto a = kernels::serial::sample_erosion(k, ts);
  const auto b = kernels::omp::sample_erosion(k, ts);
  REQUIRE(a.size() == ts.size());
  REQUIRE(b.size() == ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK(a[i].area == b[i].area);
    CHECK(a[i].signature == b[i].signature);
    CHECK(a[i].area == kernels::eroded_sample(k, ts[i]).area);
  }
}

TEST_CASE("map_trials visits every index once") {
  for (std::size_t n : {0u, 1u, 7u, 1000u}) {
    std::vector<std::atomic<int>> a(n), b(n);
    kernels::serial::map_trials(n, [&](std::size_t i) { ++a[i]; });
    kernels::omp::map_trials(n, [&](std::size_t i) { ++b[i]; });
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(a[i] == 1);
      CHECK(b[i] == 1);
    }
  }
}
