#include "lch/model_space.hpp"

#include <cmath>

namespace lch::model {

UmbilicalClass classify_umbilical(const ModelSpace& space, double lambda, double horo_tol) {
  if (!(lambda > 0.0)) throw InvalidParameter("lambda must be positive");
  if (space.dim < 2) throw InvalidParameter("dim must be at least 2");
  const double c = space.curvature;
  if (c == 0.0) return EuclideanSphere{1.0 / lambda};
  if (c > 0.0) {
    const double s = std::sqrt(c);
    return GeodesicSphereSpherical{std::atan2(s, lambda) / s};  // arccot(lambda/s)/s
  }
  const double s = std::sqrt(-c);
  if (std::abs(lambda - s) <= horo_tol * s) return Horosphere{};
  if (lambda > s) return GeodesicSphereHyperbolic{std::atanh(s / lambda) / s};  // arccoth(lambda/s)/s
  return Equidistant{characteristic_distance(c, lambda)};
}

double characteristic_distance(double c, double lambda) {
  if (!(c < 0.0)) throw InvalidParameter("characteristic distance needs negative curvature");
  const double s = std::sqrt(-c);
  if (!(lambda > 0.0) || !(lambda < s)) throw InvalidParameter("characteristic distance needs 0 < lambda < sqrt(-c)");
  return std::atanh(lambda / s) / s;  // = log((s + lambda)/(s - lambda)) / (2s)
}

double lambda_sphere_radius(double c, double lambda) {
  const UmbilicalClass u = classify_umbilical(ModelSpace{2, c}, lambda);
  if (auto* e = std::get_if<EuclideanSphere>(&u)) return e->radius;
  if (auto* g = std::get_if<GeodesicSphereSpherical>(&u)) return g->radius;
  if (auto* h = std::get_if<GeodesicSphereHyperbolic>(&u)) return h->radius;
  throw InvalidParameter("no lambda-sphere exists for this (c, lambda)");
}

void require_metric_space(const ModelSpace& space) {
  if (space.dim != 2) throw InvalidParameter("metric layer is two-dimensional");
  if (space.curvature != 0.0 && space.curvature != 1.0 && space.curvature != -1.0)
    throw InvalidParameter("metric layer supports curvature -1, 0, 1 (rescale lengths for other c)");
}

bool in_model_domain(double c, const Vec2& p) {
  if (!p.allFinite()) return false;
  if (c < 0.0) return p.squaredNorm() < 1.0;
  return true;
}

double conformal_factor(double c, const Vec2& p) {
  const double r2 = p.squaredNorm();
  if (c < 0.0) return 2.0 / (1.0 - r2);
  if (c > 0.0) return 2.0 / (1.0 + r2);
  return 1.0;
}

double metric_distance(const ModelSpace& space, const Vec2& p, const Vec2& q) {
  require_metric_space(space);
  const double c = space.curvature;
  if (!in_model_domain(c, p) || !in_model_domain(c, q)) throw InvalidParameter("point outside the model domain");
  const double e = (p - q).norm();
  if (c == 0.0) return e;
  if (c < 0.0) return 2.0 * std::asinh(e / std::sqrt((1.0 - p.squaredNorm()) * (1.0 - q.squaredNorm())));
  // chordal distance on the unit sphere is 2 e / sqrt((1+|p|^2)(1+|q|^2))
  return 2.0 * std::asin(std::min(1.0, e / std::sqrt((1.0 + p.squaredNorm()) * (1.0 + q.squaredNorm()))));
}

double length_scale(double c) {
  if (c == 0.0) return 1.0;
  return 1.0 / std::sqrt(std::abs(c));
}

}  // namespace lch::model
