#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lch/ball_polytope3.hpp"

namespace lch::kernels {

// Samples per RNG block; block b draws from SplitMix64::stream(seed, b), so the hit count
// does not depend on how blocks are distributed over threads.
inline constexpr std::size_t kMcBlock = 4096;

struct McCount {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  Vec3 box_lo = Vec3::Zero(), box_hi = Vec3::Zero();
};

struct ErodedSample {
  double area = 0.0;
  std::vector<std::int64_t> signature;  // empty when the eroded body was degenerate
};

// The serial versions are the reference implementations; the OpenMP versions must agree bit for bit.
namespace serial {
McCount mc_volume(const BallPolytope3& k, std::uint64_t n_samples, std::uint64_t seed);
std::vector<ErodedSample> sample_erosion(const BallPolytope3& k, std::span<const double> ts);
void map_trials(std::size_t n, const std::function<void(std::size_t)>& body);
}  // namespace serial

namespace omp {
McCount mc_volume(const BallPolytope3& k, std::uint64_t n_samples, std::uint64_t seed);
std::vector<ErodedSample> sample_erosion(const BallPolytope3& k, std::span<const double> ts);
void map_trials(std::size_t n, const std::function<void(std::size_t)>& body);
}  // namespace omp

// Area of the inner parallel body at depth t; degenerate depths (at combinatorial events)
// are evaluated as the mean of nearby regular depths.
ErodedSample eroded_sample(const BallPolytope3& k, double t);

}  // namespace lch::kernels
