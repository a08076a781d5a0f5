#pragma once

#include <span>
#include <vector>

#include "lch/core.hpp"

namespace lch {

template <int D>
struct MEBResult {
  using Point = Eigen::Matrix<double, D, 1>;
  Point center = Point::Zero();
  double radius = 0.0;
  std::vector<int> support;  // indices within support_tol of the sphere
};

// Smallest enclosing ball (D = 2 or 3) by Welzl's incremental scheme with nested loops.
// support_tol < 0 selects 1e-10 * max(radius, extent of the input).
template <int D>
MEBResult<D> minimal_enclosing_ball(std::span<const Eigen::Matrix<double, D, 1>> points, double support_tol = -1.0);

MEBResult<3> minimal_enclosing_ball(const std::vector<Vec3>& points, double support_tol = -1.0);
MEBResult<2> minimal_enclosing_ball(const std::vector<Vec2>& points, double support_tol = -1.0);

// True iff o lies in the convex hull of the points (no open half-space through o contains
// them all). Exhaustive Caratheodory enumeration over subsets of size <= D + 1.
template <int D>
bool halfspace_condition(std::span<const Eigen::Matrix<double, D, 1>> points, const Eigen::Matrix<double, D, 1>& o);

bool halfspace_condition(const std::vector<Vec3>& points, const Vec3& o);
bool halfspace_condition(const std::vector<Vec2>& points, const Vec2& o);

}  // namespace lch
