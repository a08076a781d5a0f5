#pragma once

#include <vector>

#include "lch/ball_polytope3.hpp"
#include "lch/meb.hpp"

namespace lch {

class ArcPolygon2;

struct InscribedBall {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
  std::vector<int> touching;  // ball indices whose facets touch the ball
  std::vector<Vec3> touch_points;
};

struct InscribedDisk {
  Vec2 center = Vec2::Zero();
  double radius = 0.0;
  std::vector<int> touching;  // disk indices
  std::vector<Vec2> touch_points;
};

// r(K) = 1/lambda - (radius of the smallest ball containing the centers).
InscribedBall inscribed_ball(const BallPolytope3& k);
// Euclidean polygons only.
InscribedDisk inscribed_ball(const ArcPolygon2& k);

// Keeps only the balls whose facets touch the inscribed ball.
BallPolytope3 reduce_to_touching(const BallPolytope3& k);
// Same touch directions, inscribed radius s; 0 < s <= r(K). Requires a reduced polytope.
BallPolytope3 shrink_touching(const BallPolytope3& k, double s);

struct ReverseInradiusReport {
  double surface_area = 0.0;
  double inradius = 0.0;       // r(K)
  double lens_inradius = 0.0;  // r(L) for the lens with the same surface area
  double margin = 0.0;         // r(K) - r(L)
  bool is_lens = false;
  bool passed = false;
};
ReverseInradiusReport verify_reverse_inradius(const BallPolytope3& k);

}  // namespace lch
