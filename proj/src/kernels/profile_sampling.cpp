#include <omp.h>

#include <exception>

#include "lch/kernels.hpp"
#include "lch/parallel.hpp"

namespace lch::kernels {

ErodedSample eroded_sample(const BallPolytope3& k, double t) {
  const double R = k.ball_radius();
  auto build_at = [&](double s) { return BallPolytope3::build(1.0 / (R - s), k.centers()); };
  ErodedSample out;
  try {
    const BallPolytope3 kt = t == 0.0 ? k : build_at(t);
    out.area = kt.surface_area();
    out.signature = kt.signature();
    return out;
  } catch (const EmptyBody&) {
    return out;
  } catch (const DegenerateBody&) {
  }
  for (double delta : {1e-7, 1e-6, 1e-5}) {
    try {
      const double d = delta * R;
      const double lo = t - d >= 0.0 ? t - d : 0.0;
      out.area = 0.5 * (build_at(lo).surface_area() + build_at(t + d).surface_area());
      return out;
    } catch (const DegenerateBody&) {
    } catch (const EmptyBody&) {
    }
  }
  throw DegenerateBody("eroded body stays degenerate around the requested depth");
}

namespace serial {
std::vector<ErodedSample> sample_erosion(const BallPolytope3& k, std::span<const double> ts) {
  std::vector<ErodedSample> out(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) out[i] = eroded_sample(k, ts[i]);
  return out;
}
}  // namespace serial

namespace omp {
std::vector<ErodedSample> sample_erosion(const BallPolytope3& k, std::span<const double> ts) {
  std::vector<ErodedSample> out(ts.size());
  map_trials(ts.size(), [&](std::size_t i) { out[i] = eroded_sample(k, ts[i]); });
  return out;
}
}  // namespace omp

}  // namespace lch::kernels
