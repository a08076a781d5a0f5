#include "lch/arc_polygon2.hpp"

#include <algorithm>
#include <cmath>

#include "lch/detail/arc_set.hpp"
#include "lch/meb.hpp"
#include "lch/quadrature.hpp"
#include "lch/reference_bodies.hpp"

namespace lch {

Vec2 Arc2::point(double theta) const { return circle.center + circle.radius * Vec2(std::cos(theta), std::sin(theta)); }

namespace {

Vec2 unit_at(double t) { return {std::cos(t), std::sin(t)}; }
Vec2 tangent_at(double t) { return {-std::sin(t), std::cos(t)}; }

bool angle_in_arc(double t, double start, double len) { return detail::wrap_angle(t - start) <= len; }

double arc_metric_length(double c, const ChartDisk& cd, double a, double len) {
  if (c == 0.0) return cd.radius * len;
  return quad::integrate([&](double t) { return model::conformal_factor(c, cd.center + cd.radius * unit_at(t)) * cd.radius; },
                         a, a + len, 1e-12)
      .value;
}

// Contribution of an arc to the chart Green integral of mu^2 dx dy.
double arc_green(double c, const ChartDisk& cd, double a, double len) {
  auto h = [c](double r2) {
    if (c < 0.0) return 2.0 / (1.0 - r2);
    if (c > 0.0) return 2.0 / (1.0 + r2);
    return 0.5;
  };
  if (c == 0.0) {
    // 1/2 integral of (rho C.e + rho^2) dtheta in closed form
    const Vec2& C = cd.center;
    const double rho = cd.radius;
    const double s = C.x() * (std::sin(a + len) - std::sin(a)) - C.y() * (std::cos(a + len) - std::cos(a));
    return 0.5 * (rho * s + rho * rho * len);
  }
  return quad::integrate(
             [&](double t) {
               const Vec2 e = unit_at(t);
               const Vec2 z = cd.center + cd.radius * e;
               return h(z.squaredNorm()) * (cd.radius * cd.center.dot(e) + cd.radius * cd.radius);
             },
             a, a + len, 1e-12)
      .value;
}

}  // namespace

ArcPolygon2 ArcPolygon2::build2(const ModelSpace& space, double lambda, std::vector<LambdaDisk2> disks) {
  model::require_metric_space(space);
  if (disks.empty()) throw InvalidParameter("at least one disk is required");
  if (!(lambda > 0.0)) throw InvalidParameter("lambda must be positive");
  for (const LambdaDisk2& d : disks)
    if (d.curvature() != space.curvature || d.lambda() != lambda)
      throw InvalidParameter("disk does not match the polygon's space or lambda");

  ArcPolygon2 k;
  k.space_ = space;
  k.lambda_ = lambda;
  k.disks_ = std::move(disks);
  const double c = space.curvature;
  const int n = static_cast<int>(k.disks_.size());
  for (const LambdaDisk2& d : k.disks_) k.chart_.push_back(d.chart_disk());

  std::vector<bool> duplicate(n, false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i && !duplicate[i]; ++j)
      if (!duplicate[j] && (k.chart_[i].center - k.chart_[j].center).norm() <= 1e-12 &&
          std::abs(k.chart_[i].radius - k.chart_[j].radius) <= 1e-12)
        duplicate[i] = true;

  std::vector<Arc2> raw;
  std::vector<int> arc_of_disk(n, -1);
  std::vector<detail::CircleConstraint> cons;
  std::vector<std::pair<int, int>> tags;  // (start tag, end tag) per raw arc
  for (int i = 0; i < n; ++i) {
    if (duplicate[i]) continue;
    const ChartDisk& ci = k.chart_[i];
    cons.clear();
    for (int j = 0; j < n; ++j) {
      if (j == i || duplicate[j]) continue;
      const ChartDisk& cj = k.chart_[j];
      const Vec2 w = ci.center - cj.center;
      cons.push_back({2.0 * ci.radius * w.x(), 2.0 * ci.radius * w.y(),
                      cj.radius * cj.radius - w.squaredNorm() - ci.radius * ci.radius, j});
    }
    const auto pieces = detail::allowed_arcs(cons);
    if (pieces.size() > 1) throw TopologyError("a disk contributes more than one boundary arc");
    if (pieces.empty()) continue;
    const detail::ArcPiece& p = pieces.front();
    if (p.start_tag >= 0 && p.length < 1e-9) throw DegenerateBody("boundary arc of vanishing length");
    Arc2 a;
    a.disk = i;
    a.circle = ci;
    a.theta_start = p.start;
    a.arc_angle = p.length;
    a.full_circle = p.start_tag < 0;
    arc_of_disk[i] = static_cast<int>(raw.size());
    raw.push_back(a);
    tags.push_back({p.start_tag, p.end_tag});
  }
  if (raw.empty()) throw EmptyBody("disks have no common interior");

  // Boundary order.
  if (raw.size() == 1) {
    if (!raw[0].full_circle) throw TopologyError("single arc without closing partner");
    k.arcs_ = raw;
  } else {
    std::vector<bool> used(raw.size(), false);
    int cur = 0;
    for (std::size_t step = 0; step < raw.size(); ++step) {
      if (raw[cur].full_circle) throw TopologyError("full circle alongside other arcs");
      used[cur] = true;
      k.arcs_.push_back(raw[cur]);
      const int next_disk = tags[cur].second;
      const int nxt = next_disk >= 0 ? arc_of_disk[next_disk] : -1;
      if (nxt < 0 || tags[nxt].first != raw[cur].disk) throw DegenerateBody("boundary arcs do not chain");
      cur = nxt;
      if (used[cur]) break;
    }
    if (k.arcs_.size() != raw.size() || cur != 0) throw TopologyError("boundary is not a single closed loop");
    for (std::size_t a = 0; a < k.arcs_.size(); ++a) {
      Arc2& in = k.arcs_[a];
      Arc2& out = k.arcs_[(a + 1) % k.arcs_.size()];
      const double te = in.theta_start + in.arc_angle;
      const Vec2 p_in = in.point(te), p_out = out.point(out.theta_start);
      if ((p_in - p_out).norm() > 1e-7 * std::max(1.0, in.circle.radius)) throw DegenerateBody("arc endpoints disagree");
      Vertex2 v;
      v.position = 0.5 * (p_in + p_out);
      v.disk_in = in.disk;
      v.disk_out = out.disk;
      const Vec2 t_in = tangent_at(te), t_out = tangent_at(out.theta_start);
      v.turning = std::atan2(cross2(t_in, t_out), t_in.dot(t_out));
      const int vi = static_cast<int>(k.vertices_.size());
      in.v_end = vi;
      out.v_start = vi;
      k.vertices_.push_back(v);
    }
  }

  // Compactness in the disk model: the region must stay off the ideal boundary.
  if (c < 0.0) {
    for (const Arc2& a : k.arcs_) {
      double far = 0.0;
      const Vec2& C = a.circle.center;
      const double tc = C.norm() > 0.0 ? std::atan2(C.y(), C.x()) : a.theta_start;
      if (a.full_circle || angle_in_arc(tc, a.theta_start, a.arc_angle)) far = C.norm() + a.circle.radius;
      far = std::max({far, a.point(a.theta_start).norm(), a.point(a.theta_start + a.arc_angle).norm()});
      if (far >= 1.0 - 1e-12) throw NonCompact("intersection reaches the ideal boundary");
    }
  }

  for (Arc2& a : k.arcs_) a.length = arc_metric_length(c, a.circle, a.theta_start, a.arc_angle);
  for (int i = 0; i < n; ++i) {
    if (!duplicate[i] && arc_of_disk[i] >= 0)
      k.retained_.push_back(i);
    else
      k.redundant_.push_back(i);
  }

  if (c == 0.0) {
    // shoelace over vertices plus circular segments
    double a2 = 0.0;
    if (k.vertices_.empty()) {
      a2 = kPi * k.arcs_[0].circle.radius * k.arcs_[0].circle.radius;
    } else {
      for (std::size_t v = 0; v < k.vertices_.size(); ++v)
        a2 += 0.5 * cross2(k.vertices_[v].position, k.vertices_[(v + 1) % k.vertices_.size()].position);
      for (const Arc2& a : k.arcs_)
        a2 += 0.5 * a.circle.radius * a.circle.radius * (a.arc_angle - std::sin(a.arc_angle));
    }
    k.area_ = a2;
  } else {
    k.area_ = area2_green(k);
  }
  return k;
}

ArcPolygon2 ArcPolygon2::euclidean(double lambda, const std::vector<Vec2>& centers) {
  std::vector<LambdaDisk2> disks;
  for (const Vec2& p : centers) disks.push_back(LambdaDisk2::geodesic(0.0, lambda, p));
  return build2(ModelSpace{2, 0.0}, lambda, std::move(disks));
}

double ArcPolygon2::perimeter() const {
  double p = 0.0;
  for (const Arc2& a : arcs_) p += a.length;
  return p;
}

double ArcPolygon2::area() const { return area_; }

bool ArcPolygon2::contains(const Vec2& p) const {
  for (const ChartDisk& cd : chart_)
    if ((p - cd.center).norm() > cd.radius) return false;
  return true;
}

double perimeter2(const ArcPolygon2& k) { return k.perimeter(); }
double area2(const ArcPolygon2& k) { return k.area(); }

double area2_green(const ArcPolygon2& k) {
  double s = 0.0;
  for (const Arc2& a : k.arcs()) s += arc_green(k.curvature(), a.circle, a.theta_start, a.arc_angle);
  return s;
}

double area2_turning(const ArcPolygon2& k) {
  const double c = k.curvature();
  if (c == 0.0) throw InvalidParameter("turning identity determines the area only for c != 0");
  double turn = 0.0;
  for (const Vertex2& v : k.vertices()) turn += v.turning;
  return (kTwoPi - k.lambda() * k.perimeter() - turn) / c;
}

double total_turning_defect(const ArcPolygon2& k) {
  double turn = 0.0;
  for (const Vertex2& v : k.vertices()) turn += v.turning;
  return k.lambda() * k.perimeter() + turn + k.curvature() * k.area() - kTwoPi;
}

namespace {
void require_euclidean(const ArcPolygon2& k) {
  if (k.curvature() != 0.0) throw InvalidParameter("operation is defined for Euclidean polygons");
}
}  // namespace

ConstraintsReport constraints_check(const ArcPolygon2& k) {
  require_euclidean(k);
  ConstraintsReport r;
  r.gamma_star = lens2_vertex_angle(k.lambda(), k.perimeter());
  for (const Vertex2& v : k.vertices()) {
    r.max_gamma = std::max(r.max_gamma, v.turning);
    r.sum_gamma += v.turning;
  }
  r.passed = r.max_gamma <= r.gamma_star + 1e-9 && std::abs(r.sum_gamma - 2.0 * r.gamma_star) <= 1e-9;
  return r;
}

double initial_derivative_2d(const ArcPolygon2& k) {
  require_euclidean(k);
  double s = 0.0;
  for (const Vertex2& v : k.vertices()) s += std::tan(0.5 * v.turning);
  return -k.lambda() * k.perimeter() - 2.0 * s;
}

double eroded_perimeter(const ArcPolygon2& k, double t) {
  require_euclidean(k);
  const double R = 1.0 / k.lambda();
  if (!(t >= 0.0) || !(t < R)) throw InvalidParameter("erosion depth must satisfy 0 <= t < 1/lambda");
  std::vector<Vec2> centers;
  for (int i : k.retained()) centers.push_back(k.disks()[i].center());
  return ArcPolygon2::euclidean(1.0 / (R - t), centers).perimeter();
}

GoalReport goal_inequality(std::span<const double> gammas, double gamma_star) {
  GoalReport g;
  g.m = static_cast<int>(gammas.size());
  for (double x : gammas) g.lhs += std::tan(0.5 * x);
  g.rhs = 2.0 * std::tan(0.5 * gamma_star);
  g.passed = g.lhs <= g.rhs + 1e-12;
  g.equality = std::abs(g.lhs - g.rhs) <= 1e-12 * std::max(1.0, g.rhs);
  return g;
}

GoalReport goal_inequality_check(const ArcPolygon2& k) {
  require_euclidean(k);
  std::vector<double> gammas;
  for (const Vertex2& v : k.vertices()) gammas.push_back(v.turning);
  return goal_inequality(gammas, lens2_vertex_angle(k.lambda(), k.perimeter()));
}

Rip2dReport rip2d_check(const ArcPolygon2& k) {
  require_euclidean(k);
  Rip2dReport r;
  r.perimeter = k.perimeter();
  r.area = k.area();
  r.lens_area = lens2_area(k.lambda(), std::min(r.perimeter, kTwoPi / k.lambda()));
  r.margin = r.area - r.lens_area;
  r.is_lens = k.is_lens();
  r.passed = r.margin >= -1e-9;
  return r;
}

bool disks_intersect(std::span<const ChartDisk> disks, double tol, Vec2* out) {
  const int n = static_cast<int>(disks.size());
  auto inside_all = [&](const Vec2& p) {
    for (const ChartDisk& d : disks)
      if ((p - d.center).norm() > d.radius + tol) return false;
    return true;
  };
  for (int j = 0; j < n; ++j) {
    bool inside = true;
    for (int i = 0; i < n && inside; ++i)
      inside = (disks[j].center - disks[i].center).norm() + disks[j].radius <= disks[i].radius + tol;
    if (inside) {
      if (out) *out = disks[j].center;
      return true;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vec2 dv = disks[j].center - disks[i].center;
      const double d = dv.norm();
      const double ri = disks[i].radius, rj = disks[j].radius;
      if (d == 0.0 || d > ri + rj + tol || d < std::abs(ri - rj) - tol) continue;
      const Vec2 e = dv / d, perp(-e.y(), e.x());
      const double a = (d * d + ri * ri - rj * rj) / (2.0 * d);
      const double h = std::sqrt(std::max(0.0, ri * ri - a * a));
      for (double sgn : {1.0, -1.0}) {
        const Vec2 p = disks[i].center + a * e + sgn * h * perp;
        if (inside_all(p)) {
          if (out) *out = p;
          return true;
        }
      }
    }
  }
  return false;
}

namespace {

// Shrunk chart disks for inset s, or false when some disk disappears.
bool shrunk_disks(const ArcPolygon2& k, double s, std::vector<ChartDisk>& out) {
  out.clear();
  for (int i : k.retained()) {
    try {
      out.push_back(k.disks()[i].chart_disk(s));
    } catch (const EmptyBody&) {
      return false;
    }
  }
  if (k.curvature() < 0.0) out.push_back({Vec2::Zero(), 1.0 - 1e-15});
  return true;
}

}  // namespace

InscribedDisk inradius2(const ArcPolygon2& k) {
  InscribedDisk res;
  const double c = k.curvature();
  if (c == 0.0) {
    std::vector<Vec2> centers;
    for (int i : k.retained()) centers.push_back(k.disks()[i].center());
    const double R = 1.0 / k.lambda();
    const MEBResult<2> meb = minimal_enclosing_ball(centers, 1e-9 * R);
    res.center = meb.center;
    res.radius = R - meb.radius;
    for (int idx : meb.support) {
      const int i = k.retained()[idx];
      res.touching.push_back(i);
      const Vec2 d = res.center - k.disks()[i].center();
      res.touch_points.push_back(d.norm() > 0.0 ? Vec2(k.disks()[i].center() + R * d.normalized()) : res.center);
    }
    return res;
  }
  std::vector<ChartDisk> buf;
  const double tol = 1e-14;
  auto feasible = [&](double s, Vec2* w) { return shrunk_disks(k, s, buf) && disks_intersect(buf, tol, w); };
  double lo = 0.0, hi = 1.0;
  Vec2 witness = Vec2::Zero();
  if (!feasible(0.0, &witness)) throw EmptyBody("polygon has no interior");
  for (int it = 0; it < 80 && feasible(hi, nullptr); ++it) {
    lo = hi;
    hi *= 2.0;
  }
  if (feasible(hi, nullptr)) throw NumericError("inradius search did not find an infeasible radius");
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid, nullptr))
      lo = mid;
    else
      hi = mid;
  }
  feasible(lo, &witness);
  res.center = witness;
  res.radius = lo;
  for (int i : k.retained()) {
    if (std::abs(k.disks()[i].signed_distance(witness) - lo) <= 1e-6 * std::max(1.0, lo)) res.touching.push_back(i);
  }
  return res;
}

ArcPolygon2 model_lens(double c, double lambda, double r) {
  std::vector<LambdaDisk2> d{LambdaDisk2::supporting(c, lambda, Vec2::UnitX(), r),
                             LambdaDisk2::supporting(c, lambda, -Vec2::UnitX(), r)};
  return ArcPolygon2::build2(ModelSpace{2, c}, lambda, std::move(d));
}

double model_lens_inradius_for_perimeter(double c, double lambda, double perimeter) {
  model::require_metric_space(ModelSpace{2, c});
  auto per = [&](double r) {
    try {
      return model_lens(c, lambda, r).perimeter();
    } catch (const NonCompact&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  double lo = 0.0, hi = 0.0;
  bool capped = true;
  if (c == 0.0 || c > 0.0 || lambda > 1.0) {
    hi = model::lambda_sphere_radius(c, lambda);
  } else if (lambda < 1.0) {
    hi = model::characteristic_distance(c, lambda) * (1.0 - 1e-12);
  } else {
    capped = false;
    hi = 1.0;
    for (int it = 0; it < 60 && per(hi) < perimeter; ++it) {
      lo = hi;
      hi *= 2.0;
    }
  }
  if (capped && per(hi) <= perimeter) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (per(mid) < perimeter)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

TheoremB2Report theoremB_2d_check(const ArcPolygon2& k) {
  TheoremB2Report r;
  r.perimeter = k.perimeter();
  r.inradius = inradius2(k).radius;
  r.lens_inradius = model_lens_inradius_for_perimeter(k.curvature(), k.lambda(), r.perimeter);
  r.margin = r.inradius - r.lens_inradius;
  r.is_lens = k.is_lens();
  r.passed = r.margin >= -1e-9;
  return r;
}

InscribedDisk inscribed_ball(const ArcPolygon2& k) {
  if (k.curvature() != 0.0) throw InvalidParameter("inscribed_ball handles Euclidean polygons; use inradius2");
  return inradius2(k);
}

}  // namespace lch
