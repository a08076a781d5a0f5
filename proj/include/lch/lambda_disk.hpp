#pragma once

#include "lch/core.hpp"
#include "lch/model_space.hpp"

namespace lch {

// A Euclidean disk in the conformal chart.
struct ChartDisk {
  Vec2 center;
  double radius;
};

// Closed region bounded by a complete curve of geodesic curvature lambda in M^2(c),
// c in {-1, 0, 1}. Which kinds are valid depends on (c, lambda):
//   Geodesic     c = 0 or c = +1, or c = -1 with lambda > 1 (a disk of fixed radius)
//   Horo         c = -1, lambda = 1; {Busemann(xi, .) <= offset}
//   Equidistant  c = -1, lambda < 1; points within the characteristic distance of the
//                left side of the oriented geodesic a -> b, plus its whole right side
class LambdaDisk2 {
 public:
  enum class Kind { Geodesic, Horo, Equidistant };

  static LambdaDisk2 geodesic(double c, double lambda, const Vec2& center);
  static LambdaDisk2 horo(double lambda, const Vec2& ideal, double offset = 0.0);
  // Endpoints may be ideal (unit norm) or interior points of the disk model.
  static LambdaDisk2 equidistant(double lambda, const Vec2& p, const Vec2& q);
  // The lambda-disk containing the geodesic disk B(origin, r) and touching it at distance r along u.
  static LambdaDisk2 supporting(double c, double lambda, const Vec2& u, double r);

  Kind kind() const { return kind_; }
  double curvature() const { return c_; }
  double lambda() const { return lambda_; }
  const Vec2& center() const { return center_; }
  const Vec2& ideal() const { return ideal_; }
  double offset() const { return offset_; }
  const Vec2& end_a() const { return a_; }
  const Vec2& end_b() const { return b_; }
  // Radius for geodesic disks, characteristic distance for equidistant domains.
  double radius() const { return radius_; }

  // Positive inside, zero on the boundary curve, negative outside (model metric).
  double signed_distance(const Vec2& p) const;

  // Chart disk of {p : signed_distance(p) >= inset}. Throws EmptyBody when that set is empty
  // and InvalidParameter when it would contain the chart's point at infinity (c = +1).
  ChartDisk chart_disk(double inset = 0.0) const;

  // Geodesic curvature of the boundary at a sample point, from the conformal-factor formula.
  double boundary_geodesic_curvature() const;
  // A point of the boundary curve inside the model domain.
  Vec2 boundary_sample() const;

 private:
  Kind kind_ = Kind::Geodesic;
  double c_ = 0.0;
  double lambda_ = 1.0;
  double radius_ = 1.0;
  Vec2 center_ = Vec2::Zero();
  Vec2 ideal_ = Vec2::UnitX();
  double offset_ = 0.0;
  Vec2 a_ = Vec2::Zero(), b_ = Vec2::Zero();
};

namespace model {
double signed_distance_to_lambda_disk(const ModelSpace& space, const LambdaDisk2& disk, const Vec2& p);
// Signed hyperbolic distance from p to the oriented geodesic a -> b, positive on the left.
double signed_distance_to_geodesic(const Vec2& a, const Vec2& b, const Vec2& p);
}  // namespace model

}  // namespace lch
