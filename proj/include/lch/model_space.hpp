#pragma once

#include <variant>

#include "lch/core.hpp"

namespace lch {

struct ModelSpace {
  int dim = 2;
  double curvature = 0.0;
};

struct EuclideanSphere { double radius; };
struct GeodesicSphereSpherical { double radius; };
struct GeodesicSphereHyperbolic { double radius; };
struct Horosphere {};
struct Equidistant { double characteristic_distance; };

using UmbilicalClass =
    std::variant<EuclideanSphere, GeodesicSphereSpherical, GeodesicSphereHyperbolic, Horosphere, Equidistant>;

namespace model {

// Complete totally umbilical hypersurfaces of normal curvature lambda in M^n(c).
// The horosphere regime is selected when |lambda - sqrt(-c)| <= horo_tol * sqrt(-c).
UmbilicalClass classify_umbilical(const ModelSpace& space, double lambda, double horo_tol = 1e-12);

// Distance between an equidistant hypersurface of curvature lambda and its base hyperplane.
double characteristic_distance(double c, double lambda);

// Radius of a lambda-sphere where one exists (Euclidean or geodesic sphere); throws otherwise.
double lambda_sphere_radius(double c, double lambda);

// Metric layer (dim 2, c in {-1, 0, 1}) in the conformal charts:
// c = -1 Poincare unit disk, c = +1 stereographic chart from the north pole, c = 0 identity.
void require_metric_space(const ModelSpace& space);
bool in_model_domain(double c, const Vec2& p);
double conformal_factor(double c, const Vec2& p);  // ds = mu(p) |dz|
double metric_distance(const ModelSpace& space, const Vec2& p, const Vec2& q);

// Lengths computed in M(sign c) become lengths in M(c) after multiplying by this factor.
double length_scale(double c);

}  // namespace model
}  // namespace lch
