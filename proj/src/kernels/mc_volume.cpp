#include <omp.h>

#include <algorithm>

#include "lch/kernels.hpp"
#include "lch/parallel.hpp"
#include "lch/rng.hpp"

namespace lch::kernels {
namespace {

// Bounding box of the body: intersection of the boxes of all balls.
void body_box(const BallPolytope3& k, Vec3& lo, Vec3& hi) {
  const double R = k.ball_radius();
  lo = Vec3::Constant(-1e300);
  hi = Vec3::Constant(1e300);
  for (const Vec3& c : k.centers()) {
    lo = lo.cwiseMax(c - Vec3::Constant(R));
    hi = hi.cwiseMin(c + Vec3::Constant(R));
  }
}

std::uint64_t count_block(const BallPolytope3& k, const Vec3& lo, const Vec3& span, std::uint64_t seed,
                          std::uint64_t block, std::uint64_t count) {
  SplitMix64 rng = SplitMix64::stream(seed, block);
  const double R2 = k.ball_radius() * k.ball_radius();
  const auto& centers = k.centers();
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < count; ++s) {
    const Vec3 x(lo.x() + span.x() * rng.uniform(), lo.y() + span.y() * rng.uniform(), lo.z() + span.z() * rng.uniform());
    bool in = true;
    for (const Vec3& c : centers) {
      if ((x - c).squaredNorm() > R2) {
        in = false;
        break;
      }
    }
    hits += in ? 1 : 0;
  }
  return hits;
}

McCount prepare(const BallPolytope3& k, std::uint64_t n_samples) {
  McCount out;
  body_box(k, out.box_lo, out.box_hi);
  out.samples = n_samples;
  return out;
}

}  // namespace

namespace serial {
McCount mc_volume(const BallPolytope3& k, std::uint64_t n_samples, std::uint64_t seed) {
  McCount out = prepare(k, n_samples);
  const Vec3 span = out.box_hi - out.box_lo;
  const std::uint64_t blocks = (n_samples + kMcBlock - 1) / kMcBlock;
  for (std::uint64_t b = 0; b < blocks; ++b)
    out.hits += count_block(k, out.box_lo, span, seed, b, std::min<std::uint64_t>(kMcBlock, n_samples - b * kMcBlock));
  return out;
}
}  // namespace serial

namespace omp {
McCount mc_volume(const BallPolytope3& k, std::uint64_t n_samples, std::uint64_t seed) {
  McCount out = prepare(k, n_samples);
  const Vec3 span = out.box_hi - out.box_lo;
  const std::int64_t blocks = static_cast<std::int64_t>((n_samples + kMcBlock - 1) / kMcBlock);
  std::uint64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits) num_threads(thread_count())
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t ub = static_cast<std::uint64_t>(b);
    hits += count_block(k, out.box_lo, span, seed, ub, std::min<std::uint64_t>(kMcBlock, n_samples - ub * kMcBlock));
  }
  out.hits = hits;
  return out;
}
}  // namespace omp

}  // namespace lch::kernels
