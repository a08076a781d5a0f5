#pragma once

#include <vector>

#include "lch/ball_polytope3.hpp"
#include "lch/inradius.hpp"

namespace lch {

// Radial projection from the inscribed center o onto the inscribed sphere, seen from one facet.
// The facet's sphere has center o - D u with D = 1/lambda - r, and touches the inscribed
// sphere at p = o + r u.
struct RadialChart {
  Vec3 center = Vec3::Zero();  // o
  double r = 0.0;
  double lambda = 1.0;
  int facet = -1;  // ball index
  Vec3 axis = Vec3::UnitZ();  // u
  Vec3 touch_point = Vec3::Zero();

  double offset() const { return 1.0 / lambda - r; }  // D
  // Distance from o to the facet sphere along a ray at polar angle t from the axis.
  double ray_length(double t) const;
  // Area density of the facet sphere over the inscribed sphere along that ray;
  // axially symmetric, so the azimuth does not enter.
  double density(double t) const;
};

RadialChart make_chart(const BallPolytope3& k, const InscribedBall& b, int ball_index);
Vec3 radial_project(const RadialChart& chart, const Vec3& q);

// Area of the radial image of the facet on the inscribed sphere. Requires every retained
// ball to touch the inscribed ball.
double projected_facet_area(const BallPolytope3& k, const InscribedBall& b, int ball_index);

struct Claim3Report {
  double inradius = 0.0;
  std::vector<double> projected;  // per facet, in facet order
  double total = 0.0;
  double sphere_area = 0.0;  // 4 pi r^2
  double rel_deviation = 0.0;
  bool passed = false;
};
Claim3Report claim3_check(const BallPolytope3& k);

// |F| / |F~| for a facet of the lens with inradius r: 1 / (lambda r).
double ratio_F(double lambda, double r);

struct FacetRatio {
  int ball = -1;
  double area = 0.0;
  double projected = 0.0;
  double ratio = 0.0;
  bool extension = false;  // facet is its own natural radial extension
};

struct KeyClaimReport {
  double inradius = 0.0;
  double bound = 0.0;  // the lens ratio
  std::vector<FacetRatio> facets;
  double max_ratio = 0.0;
  double surface_area = 0.0;
  double chain_bound = 0.0;  // bound * sum of projected areas
  double lens_area = 0.0;    // surface area of the lens with the same inradius
  bool strict = false;       // some facet differs from its extension and the chain is strict
  bool passed = false;
};
KeyClaimReport key_claim_check(const BallPolytope3& k);

struct Wedge {
  double from = 0.0;  // azimuths about the axis, to > from, to - from <= 2 pi
  double to = kTwoPi;
};

// |C_x| / |C~_x| for the sector of cone half-angle x pi / 2.
double sector_ratio(const RadialChart& chart, double x, const Wedge& wedge);
double sector_area(const RadialChart& chart, double x, const Wedge& wedge);
double sector_projected_area(const RadialChart& chart, double x, const Wedge& wedge);
// Integral over polar angles [0, x pi / 2] of (density - ratio_F) sin t; nonpositive, zero at x = 1.
double sector_deficit(const RadialChart& chart, double x);

}  // namespace lch
