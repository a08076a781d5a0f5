#pragma once

#include <cmath>
#include <vector>

#include "lch/core.hpp"
#include "lch/rng.hpp"

namespace lch::test {

// Two balls of radius 1/lambda whose lens has half-angle alpha.
inline std::vector<Vec3> lens_centers(double alpha, double lambda = 1.0) {
  const double h = std::cos(alpha) / lambda;
  return {Vec3(0, 0, -h), Vec3(0, 0, h)};
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline Vec3 random_unit(SplitMix64& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, kTwoPi);
  const double s = std::sqrt(1.0 - z * z);
  return {s * std::cos(phi), s * std::sin(phi), z};
}

// Random centers in a cube of half-width w (a generic, non-touching body when w is small).
inline std::vector<Vec3> random_centers(SplitMix64& rng, int m, double w) {
  std::vector<Vec3> c;
  for (int i = 0; i < m; ++i) c.emplace_back(rng.uniform(-w, w), rng.uniform(-w, w), rng.uniform(-w, w));
  return c;
}

}  // namespace lch::test
