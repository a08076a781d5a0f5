#pragma once

#include <span>
#include <vector>

namespace lch::detail {

// Half-plane-like constraint on a circle parametrized by angle: a cos t + b sin t <= c.
struct CircleConstraint {
  double a, b, c;
  int tag;
};

// A counter-clockwise arc [start, start + length]; start in [0, 2pi). The tags name the
// constraints that cut the arc at either end (-1 when the arc is the full circle).
struct ArcPiece {
  double start;
  double length;
  int start_tag;
  int end_tag;
};

// Intersection of the allowed sets of all constraints, as disjoint arcs sorted by start.
std::vector<ArcPiece> allowed_arcs(std::span<const CircleConstraint> constraints);

double wrap_angle(double t);  // into [0, 2pi)

}  // namespace lch::detail
