#pragma once

#include <vector>

#include "lch/ball_polytope3.hpp"
#include "lch/reference_bodies.hpp"

namespace lch {

struct ErosionProfile {
  double inradius = 0.0;
  std::vector<double> ts;
  std::vector<double> areas;
  std::vector<double> events;  // depths where the combinatorial structure changes
};

// Same centers, ball radius 1/lambda - t. Throws EmptyBody when t >= r(K).
BallPolytope3 inner_parallel(const BallPolytope3& k, double t);
// Surface area of K_t (robust at event depths).
double eroded_area(const BallPolytope3& k, double t);

ErosionProfile profile(const BallPolytope3& k, int n_samples);
// Event depths in [0, t_max), located by bisection on the combinatorial signature to ~1e-10 / lambda.
std::vector<double> find_events(const BallPolytope3& k, double t_max, int grid);

double volume_via_profile(const BallPolytope3& k);

// -2 lambda |dK| - 2 sum over edges of l tan(gamma / 2).
double initial_derivative(const BallPolytope3& k);

// Closed-form profile of the lens with the given inradius.
double lens_profile(double lambda, double lens_inradius, double t);

struct ProfileComparison {
  double min_gap = 0.0;  // min over samples of f_K(t) - f_L(t)
  double t_at_min = 0.0;
  double inradius_k = 0.0;
  double inradius_l = 0.0;
  std::size_t samples = 0;
  bool passed = false;
};
// Precondition: |dK| = |dL| to 1e-9 relative.
ProfileComparison compare_profiles(const BallPolytope3& k, const LensParam& lens, int n_samples = 48);

struct ExpansionReport {
  double ts[3] = {0, 0, 0};
  double remainders[3] = {0, 0, 0};
  double ratio_first = 0.0;   // remainder(t) / remainder(t/2)
  double ratio_second = 0.0;  // remainder(t/2) / remainder(t/4)
  bool exact = false;         // remainder vanishes to rounding (no edges)
  bool passed = false;
};
// Precondition: no combinatorial event in [0, t].
ExpansionReport expansion_check(const BallPolytope3& k, double t);

}  // namespace lch
