#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lch/core.hpp"
#include "lch/meb.hpp"

namespace lch {

struct Vertex {
  Vec3 position;
  std::array<int, 3> incident;  // ball indices, ascending
};

// Arc of the circle where spheres i < j meet. theta runs counter-clockwise about axis,
// which points from o_i to o_j; point(theta) = center + radius (cos theta e1 + sin theta e2).
struct EdgeArc {
  int i = -1, j = -1;
  Vec3 circle_center, axis, e1, e2;
  double circle_radius = 0.0;
  double theta_start = 0.0;
  double arc_angle = 0.0;
  bool full_circle = false;
  int v_start = -1, v_end = -1;
  double length = 0.0;
  double dihedral = 0.0;  // angle o_i a o_j at any edge point a

  Vec3 point(double theta) const;
  Vec3 tangent(double theta) const;  // unit, increasing theta
};

struct ArcUse {
  int edge;
  bool forward;  // traversed with increasing theta
};

struct Facet {
  int ball_index = -1;
  std::vector<std::vector<ArcUse>> boundary_loops;  // facet on the left seen from outside
  double area = 0.0;
};

class BallPolytope3 {
 public:
  // Throws EmptyBody, DegenerateBody or TopologyError.
  static BallPolytope3 build(double lambda, std::vector<Vec3> centers);

  double lambda() const { return lambda_; }
  double ball_radius() const { return 1.0 / lambda_; }
  const std::vector<Vec3>& centers() const { return centers_; }
  const std::vector<int>& retained() const { return retained_; }
  const std::vector<int>& redundant() const { return redundant_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<EdgeArc>& edges() const { return edges_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const MEBResult<3>& center_meb() const { return meb_; }
  // Index into facets() of the facet lying on ball b, or -1.
  int facet_of_ball(int b) const;

  double surface_area() const;
  double volume() const;
  bool contains(const Vec3& x) const;
  bool is_lens() const { return retained_.size() == 2; }

  // Combinatorial fingerprint: retained balls, vertex triples and full-circle edges.
  std::vector<std::int64_t> signature() const;

 private:
  double lambda_ = 1.0;
  std::vector<Vec3> centers_;
  std::vector<int> retained_, redundant_;
  std::vector<Facet> facets_;
  std::vector<EdgeArc> edges_;
  std::vector<Vertex> vertices_;
  MEBResult<3> meb_;
};

// Facet area from the intrinsic Gauss-Bonnet formula on the facet's sphere.
double facet_area(const BallPolytope3& k, const Facet& f);
double surface_area(const BallPolytope3& k);
double volume(const BallPolytope3& k);
// Divergence-theorem volume with Gauss-Legendre arc integrals (refined until stable to 1e-12).
double volume_quadrature(const BallPolytope3& k);
bool membership(const BallPolytope3& k, const Vec3& x);

struct ConvexityReport {
  double max_violation = 0.0;
  std::size_t checks = 0;
  bool passed = true;
};
// Boundary points are sampled by ray casting from the enclosing-ball center of the centers.
ConvexityReport validate_lambda_convexity(const BallPolytope3& k, int samples, std::uint64_t seed);

}  // namespace lch
