#include "lch/detail/arc_set.hpp"

#include <algorithm>
#include <cmath>

#include "lch/core.hpp"

namespace lch::detail {

double wrap_angle(double t) {
  double w = std::fmod(t, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

namespace {

// Intersect arc x with arc y; both lengths in (0, 2pi].
void intersect_pair(const ArcPiece& x, const ArcPiece& y, std::vector<ArcPiece>& out) {
  if (x.length >= kTwoPi) {
    out.push_back(y);
    return;
  }
  if (y.length >= kTwoPi) {
    out.push_back(x);
    return;
  }
  // Work in coordinates where x starts at 0.
  const double ys = wrap_angle(y.start - x.start);
  const double ye = ys + y.length;
  if (ys < x.length) {
    const double e = std::min(ye, x.length);
    if (e > ys) out.push_back({wrap_angle(x.start + ys), e - ys, y.start_tag, ye <= x.length ? y.end_tag : x.end_tag});
  }
  if (ye > kTwoPi) {
    const double e = std::min(ye - kTwoPi, x.length);
    if (e > 0.0) out.push_back({x.start, e, x.start_tag, ye - kTwoPi <= x.length ? y.end_tag : x.end_tag});
  }
}

}  // namespace

std::vector<ArcPiece> allowed_arcs(std::span<const CircleConstraint> constraints) {
  std::vector<ArcPiece> current{{0.0, kTwoPi, -1, -1}};
  std::vector<ArcPiece> next;
  for (const CircleConstraint& k : constraints) {
    const double s = std::hypot(k.a, k.b);
    if (s <= 1e-300) {
      if (k.c >= 0.0) continue;
      return {};
    }
    const double ratio = k.c / s;
    if (ratio >= 1.0) continue;
    if (ratio <= -1.0) return {};
    const double w = std::acos(ratio);
    const double phi = std::atan2(k.b, k.a);
    const ArcPiece allowed{wrap_angle(phi + w), kTwoPi - 2.0 * w, k.tag, k.tag};
    next.clear();
    for (const ArcPiece& piece : current) intersect_pair(piece, allowed, next);
    current.swap(next);
    if (current.empty()) return {};
  }
  std::sort(current.begin(), current.end(), [](const ArcPiece& p, const ArcPiece& q) { return p.start < q.start; });
  return current;
}

}  // namespace lch::detail
