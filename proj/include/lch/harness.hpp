#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lch/arc_polygon2.hpp"
#include "lch/ball_polytope3.hpp"
#include "lch/body_io.hpp"

namespace lch {

struct GenSpec {
  std::uint64_t seed = 0;
  int m = 4;
  double inradius = 0.5;  // r0
  double lambda = 1.0;
  int dim = 3;
  double curvature = 0.0;  // dim 2 only
};

void validate(const GenSpec& spec);

// m touching balls with centers (r0 - 1/lambda) u_k around the origin; the directions are
// resampled until the origin lies in their hull. m = 2 gives the lens (antipodal pair).
// Throws GenerationError after 10^4 rejected draws.
Body3 random_polytope_spec(const GenSpec& spec);
BallPolytope3 random_polytope(const GenSpec& spec);
// Same construction in M^2(c): the lambda-disks supporting the disk B(origin, r0).
Body2 random_polygon_spec(const GenSpec& spec);
ArcPolygon2 random_polygon(const GenSpec& spec);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};
McEstimate mc_volume(const BallPolytope3& k, std::uint64_t n_samples, std::uint64_t seed);

struct SurfaceOracle {
  double coarse = 0.0;        // (|K| - |K_t|) / t
  double fine = 0.0;          // same at t / 2
  double extrapolated = 0.0;  // 2 fine - coarse
};
SurfaceOracle surface_oracle(const BallPolytope3& k, double t = 1e-4);

// |K| against the lens with the same surface area.
struct RipReport {
  double surface_area = 0.0;
  double volume = 0.0;
  double lens_volume = 0.0;
  double margin = 0.0;
  bool has_vertex = false;
  bool passed = false;
};
RipReport rip_check(const BallPolytope3& k);

struct SweepConfig {
  std::size_t trials = 100;
  int m_max = 12;
  std::uint64_t seed = 1;
  double lambda = 1.0;
  int dim = 3;
  double curvature = 0.0;
};

// Per-trial spec: drawn from SplitMix64::stream(seed, trial).
GenSpec sweep_spec(const SweepConfig& cfg, std::size_t trial);

struct Violation {
  std::size_t trial = 0;
  GenSpec spec;
  std::string check;
  double margin = 0.0;
  std::string detail;
};

struct SweepRow {
  std::size_t trial = 0;
  GenSpec spec;
  std::map<std::string, double> values;
};

struct SweepReport {
  std::size_t trials = 0;
  std::vector<Violation> violations;
  std::map<std::string, double> min_margins;
  std::vector<SweepRow> rows;  // by trial index
  double seconds = 0.0;
  double mean_trial_seconds = 0.0;
};

// dim 3: rip, inradius, gb, keyclaim. dim 2: rip2d, inradius2d, goal2d.
SweepReport run_sweep(const SweepConfig& cfg);
// Margins and specs, one row per trial, .17g; independent of timing and thread count.
void write_sweep_csv(const SweepReport& r, const std::string& path);

}  // namespace lch
