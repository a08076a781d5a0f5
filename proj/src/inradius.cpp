#include "lch/inradius.hpp"

#include <algorithm>
#include <cmath>

#include "lch/reference_bodies.hpp"

namespace lch {

InscribedBall inscribed_ball(const BallPolytope3& k) {
  const double R = k.ball_radius();
  const MEBResult<3>& meb = k.center_meb();
  if (meb.radius >= R) throw EmptyBody("no inscribed ball: centers do not fit in a ball of radius 1/lambda");
  InscribedBall b;
  b.center = meb.center;
  b.radius = R - meb.radius;
  for (int i = 0; i < static_cast<int>(k.centers().size()); ++i) {
    const Vec3 d = b.center - k.centers()[i];
    const double dist = d.norm();
    if (std::abs(R - dist - b.radius) >= 1e-9 * R) continue;
    b.touching.push_back(i);
    b.touch_points.push_back(dist > 0.0 ? Vec3(k.centers()[i] + R * d / dist) : Vec3(b.center));
  }
  // A lone ball touches everywhere; otherwise the touch points must surround the center.
  if (b.touching.size() > 1 && !halfspace_condition(b.touch_points, b.center))
    throw NumericError("inscribed ball touch points violate the half-space condition");
  return b;
}

BallPolytope3 reduce_to_touching(const BallPolytope3& k) {
  const InscribedBall b = inscribed_ball(k);
  std::vector<Vec3> kept;
  for (int i : b.touching) {
    bool dup = false;
    for (const Vec3& c : kept) dup = dup || (c - k.centers()[i]).norm() <= 1e-12 * k.ball_radius();
    if (!dup) kept.push_back(k.centers()[i]);
  }
  if (kept.size() == k.centers().size()) return k;
  return BallPolytope3::build(k.lambda(), kept);
}

BallPolytope3 shrink_touching(const BallPolytope3& k, double s) {
  const InscribedBall b = inscribed_ball(k);
  if (!(s > 0.0) || s > b.radius * (1.0 + 1e-12)) throw InvalidParameter("shrink radius must satisfy 0 < s <= r(K)");
  if (b.touching.size() != k.centers().size()) throw PreconditionError("shrink_touching needs a polytope reduced to touching balls");
  if (s == b.radius) return k;
  const double R = k.ball_radius();
  std::vector<Vec3> moved;
  for (const Vec3& c : k.centers()) {
    const Vec3 d = c - b.center;
    const double n = d.norm();
    if (n == 0.0) throw InvalidParameter("a single ball has no touch direction to move along");
    moved.push_back(b.center + (R - s) * d / n);
  }
  return BallPolytope3::build(k.lambda(), moved);
}

ReverseInradiusReport verify_reverse_inradius(const BallPolytope3& k) {
  ReverseInradiusReport rep;
  rep.surface_area = k.surface_area();
  rep.inradius = inscribed_ball(k).radius;
  const LensParam lens = lens3_from_surface_area(k.lambda(), rep.surface_area);
  rep.lens_inradius = lens.inradius;
  rep.margin = rep.inradius - rep.lens_inradius;
  rep.is_lens = k.retained().size() <= 2;
  rep.passed = rep.margin >= -1e-9;
  return rep;
}

}  // namespace lch
