#pragma once

#include <span>
#include <vector>

#include "lch/core.hpp"
#include "lch/inradius.hpp"
#include "lch/lambda_disk.hpp"
#include "lch/model_space.hpp"

namespace lch {

// Arc of a chart circle, traversed counter-clockwise about the circle center.
struct Arc2 {
  int disk = -1;
  ChartDisk circle;
  double theta_start = 0.0;
  double arc_angle = 0.0;
  bool full_circle = false;
  int v_start = -1, v_end = -1;
  double length = 0.0;  // model metric

  Vec2 point(double theta) const;
};

struct Vertex2 {
  Vec2 position;  // chart coordinates
  int disk_in = -1, disk_out = -1;
  double turning = 0.0;  // exterior angle gamma_i, true angle since the chart is conformal
};

class ArcPolygon2 {
 public:
  // Throws EmptyBody, DegenerateBody, NonCompact, InvalidParameter.
  static ArcPolygon2 build2(const ModelSpace& space, double lambda, std::vector<LambdaDisk2> disks);
  static ArcPolygon2 euclidean(double lambda, const std::vector<Vec2>& centers);

  const ModelSpace& space() const { return space_; }
  double curvature() const { return space_.curvature; }
  double lambda() const { return lambda_; }
  const std::vector<LambdaDisk2>& disks() const { return disks_; }
  const std::vector<ChartDisk>& chart_disks() const { return chart_; }
  const std::vector<Arc2>& arcs() const { return arcs_; }  // boundary order
  const std::vector<Vertex2>& vertices() const { return vertices_; }
  const std::vector<int>& retained() const { return retained_; }
  const std::vector<int>& redundant() const { return redundant_; }
  bool is_lens() const { return retained_.size() <= 2; }

  double perimeter() const;
  double area() const;
  bool contains(const Vec2& p) const;  // chart point

 private:
  ModelSpace space_{2, 0.0};
  double lambda_ = 1.0;
  std::vector<LambdaDisk2> disks_;
  std::vector<ChartDisk> chart_;
  std::vector<Arc2> arcs_;
  std::vector<Vertex2> vertices_;
  std::vector<int> retained_, redundant_;
  double area_ = 0.0;
};

double perimeter2(const ArcPolygon2& k);
double area2(const ArcPolygon2& k);
// Area from the chart Green formula (any c) and from the total-turning identity (c != 0).
double area2_green(const ArcPolygon2& k);
double area2_turning(const ArcPolygon2& k);
// lambda * P + sum(gamma) + c * area - 2 pi.
double total_turning_defect(const ArcPolygon2& k);

struct ConstraintsReport {
  double gamma_star = 0.0;
  double max_gamma = 0.0;
  double sum_gamma = 0.0;
  bool passed = false;
};
ConstraintsReport constraints_check(const ArcPolygon2& k);

// -lambda P - 2 sum tan(gamma_i / 2) (Euclidean).
double initial_derivative_2d(const ArcPolygon2& k);
// Perimeter of the inner parallel polygon (same centers, radius 1/lambda - t), Euclidean.
double eroded_perimeter(const ArcPolygon2& k, double t);

struct GoalReport {
  int m = 0;
  double lhs = 0.0;  // sum tan(gamma_i / 2)
  double rhs = 0.0;  // 2 tan(gamma_star / 2)
  bool passed = false;
  bool equality = false;
};
GoalReport goal_inequality(std::span<const double> gammas, double gamma_star);
GoalReport goal_inequality_check(const ArcPolygon2& k);

struct Rip2dReport {
  double perimeter = 0.0;
  double area = 0.0;
  double lens_area = 0.0;
  double margin = 0.0;
  bool is_lens = false;
  bool passed = false;
};
Rip2dReport rip2d_check(const ArcPolygon2& k);

// Largest inscribed geodesic disk, by bisection on the radius with an exact feasibility test
// for the intersection of shrunk chart disks. Equidistant domains cap r below the
// characteristic distance.
InscribedDisk inradius2(const ArcPolygon2& k);

// Two-disk lens in M^2(c) with inradius r, symmetric about the origin.
ArcPolygon2 model_lens(double c, double lambda, double r);
// Inradius of the model lens with the given perimeter (bisection, monotone in r).
double model_lens_inradius_for_perimeter(double c, double lambda, double perimeter);

struct TheoremB2Report {
  double perimeter = 0.0;
  double inradius = 0.0;
  double lens_inradius = 0.0;
  double margin = 0.0;
  bool is_lens = false;
  bool passed = false;
};
TheoremB2Report theoremB_2d_check(const ArcPolygon2& k);

// True iff the Euclidean disks have a common point (within tol); a witness is written to out.
bool disks_intersect(std::span<const ChartDisk> disks, double tol, Vec2* out = nullptr);

}  // namespace lch
