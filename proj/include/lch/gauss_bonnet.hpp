#pragma once

#include <vector>

#include "lch/ball_polytope3.hpp"

namespace lch {

// Areas on the unit sphere of normals; the three parts sum to 4 pi.
struct GBReport {
  double facet_total = 0.0;
  double edge_total = 0.0;
  double vertex_total = 0.0;
  double grand_total = 0.0;
};

// 2 (lambda l) tan(gamma / 2): the normals along an edge fill a strip.
double edge_spherical_image(const EdgeArc& edge, double lambda);
// Spherical polygon spanned by the outward facet normals at the vertex.
double vertex_spherical_image(const BallPolytope3& k, const Vertex& v);
// Area of the convex spherical polygon with the given unit vertices (any order).
double spherical_polygon_area(std::vector<Vec3> normals);

GBReport gb_total(const BallPolytope3& k);

}  // namespace lch
