#include "lch/meb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lch/rng.hpp"

namespace lch {
namespace {

template <int D>
using PointT = Eigen::Matrix<double, D, 1>;

template <int D>
struct Ball {
  PointT<D> c;
  double r2;
  bool contains(const PointT<D>& p, double slack) const { return (p - c).squaredNorm() <= r2 * (1.0 + slack) + 1e-300; }
};

// Smallest sphere through the given points (center in their affine hull).
template <int D>
Ball<D> circumball(const std::vector<PointT<D>>& pts) {
  const int k = static_cast<int>(pts.size()) - 1;
  if (k == 0) return {pts[0], 0.0};
  Eigen::MatrixXd g(k, k);
  Eigen::VectorXd rhs(k);
  std::vector<PointT<D>> v(k);
  for (int j = 0; j < k; ++j) v[j] = pts[j + 1] - pts[0];
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) g(a, b) = 2.0 * v[a].dot(v[b]);
    rhs(a) = v[a].squaredNorm();
  }
  const Eigen::VectorXd coef = g.completeOrthogonalDecomposition().solve(rhs);
  PointT<D> c = pts[0];
  for (int j = 0; j < k; ++j) c += coef(j) * v[j];
  double r2 = 0.0;
  for (const auto& p : pts) r2 = std::max(r2, (p - c).squaredNorm());
  return {c, r2};
}

template <int D>
Ball<D> welzl_loops(const std::vector<PointT<D>>& p) {
  constexpr double slack = 1e-14;
  const int n = static_cast<int>(p.size());
  Ball<D> b{p[0], 0.0};
  for (int i = 1; i < n; ++i) {
    if (b.contains(p[i], slack)) continue;
    b = {p[i], 0.0};
    for (int j = 0; j < i; ++j) {
      if (b.contains(p[j], slack)) continue;
      b = circumball<D>({p[i], p[j]});
      for (int k = 0; k < j; ++k) {
        if (b.contains(p[k], slack)) continue;
        b = circumball<D>({p[i], p[j], p[k]});
        if constexpr (D == 3) {
          for (int l = 0; l < k; ++l) {
            if (b.contains(p[l], slack)) continue;
            b = circumball<D>({p[i], p[j], p[k], p[l]});
          }
        }
      }
    }
  }
  return b;
}

}  // namespace

template <int D>
MEBResult<D> minimal_enclosing_ball(std::span<const PointT<D>> points, double support_tol) {
  if (points.empty()) throw InvalidParameter("minimal_enclosing_ball needs at least one point");
  const int n = static_cast<int>(points.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  double extent = 0.0;
  for (int i = 1; i < n; ++i) extent = std::max(extent, (points[i] - points[0]).norm());

  Ball<D> best{};
  bool certified = false;
  SplitMix64 rng(0x6d6562ULL);
  for (int attempt = 0; attempt < 8 && !certified; ++attempt) {
    std::vector<PointT<D>> p(n);
    for (int i = 0; i < n; ++i) p[i] = points[order[i]];
    const Ball<D> b = welzl_loops<D>(p);
    if (attempt == 0 || b.r2 < best.r2) best = b;
    certified = true;
    for (int i = 0; i < n; ++i)
      if (!b.contains(points[i], 1e-12)) certified = false;
    // deterministic reshuffle for the next attempt
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
  }
  if (!certified) throw NumericError("minimal enclosing ball failed certification");

  MEBResult<D> res;
  res.center = best.c;
  res.radius = std::sqrt(best.r2);
  const double tol = support_tol >= 0.0 ? support_tol : 1e-10 * std::max({res.radius, extent, 1e-300});
  for (int i = 0; i < n; ++i)
    if (std::abs((points[i] - res.center).norm() - res.radius) <= tol) res.support.push_back(i);
  return res;
}

template MEBResult<2> minimal_enclosing_ball<2>(std::span<const Vec2>, double);
template MEBResult<3> minimal_enclosing_ball<3>(std::span<const Vec3>, double);

MEBResult<3> minimal_enclosing_ball(const std::vector<Vec3>& points, double support_tol) {
  return minimal_enclosing_ball<3>(std::span<const Vec3>(points), support_tol);
}
MEBResult<2> minimal_enclosing_ball(const std::vector<Vec2>& points, double support_tol) {
  return minimal_enclosing_ball<2>(std::span<const Vec2>(points), support_tol);
}

namespace {

// Does 0 lie in the convex hull of the given unit directions (subset, size <= D + 1)?
template <int D>
bool origin_in_simplex(const std::vector<PointT<D>>& w) {
  const int k = static_cast<int>(w.size());
  Eigen::MatrixXd a(D + 1, k);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(D + 1);
  rhs(D) = 1.0;
  for (int j = 0; j < k; ++j) {
    a.block(0, j, D, 1) = w[j];
    a(D, j) = 1.0;
  }
  const Eigen::VectorXd x = a.completeOrthogonalDecomposition().solve(rhs);
  if ((a * x - rhs).norm() > 1e-10) return false;
  return x.minCoeff() >= -1e-12;
}

template <int D>
bool search(const std::vector<PointT<D>>& w, std::vector<PointT<D>>& chosen, int from, int remaining) {
  if (remaining == 0) return origin_in_simplex<D>(chosen);
  for (int i = from; i < static_cast<int>(w.size()); ++i) {
    chosen.push_back(w[i]);
    const bool ok = search<D>(w, chosen, i + 1, remaining - 1);
    chosen.pop_back();
    if (ok) return true;
  }
  return false;
}

}  // namespace

template <int D>
bool halfspace_condition(std::span<const PointT<D>> points, const PointT<D>& o) {
  std::vector<PointT<D>> w;
  for (const auto& p : points) {
    const PointT<D> d = p - o;
    if (d.norm() == 0.0) throw InvalidParameter("halfspace_condition: point coincides with o");
    w.push_back(d.normalized());
  }
  std::vector<PointT<D>> chosen;
  for (int size = 2; size <= D + 1; ++size)
    if (search<D>(w, chosen, 0, size)) return true;
  return false;
}

template bool halfspace_condition<2>(std::span<const Vec2>, const Vec2&);
template bool halfspace_condition<3>(std::span<const Vec3>, const Vec3&);

bool halfspace_condition(const std::vector<Vec3>& points, const Vec3& o) {
  return halfspace_condition<3>(std::span<const Vec3>(points), o);
}
bool halfspace_condition(const std::vector<Vec2>& points, const Vec2& o) {
  return halfspace_condition<2>(std::span<const Vec2>(points), o);
}

}  // namespace lch
