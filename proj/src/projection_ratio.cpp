#include "lch/projection_ratio.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "lch/quadrature.hpp"

namespace lch {

double RadialChart::ray_length(double t) const {
  const double D = offset();
  const double R = 1.0 / lambda;
  const double c = std::cos(t);
  return -D * c + std::sqrt(D * D * c * c + R * R - D * D);
}

double RadialChart::density(double t) const {
  const double D = offset();
  const double R = 1.0 / lambda;
  const double c = std::cos(t);
  const double rho = ray_length(t);
  const double cos_beta = std::sqrt(D * D * c * c + R * R - D * D) / R;
  return rho * rho / (r * r * cos_beta);
}

RadialChart make_chart(const BallPolytope3& k, const InscribedBall& b, int ball_index) {
  RadialChart ch;
  ch.center = b.center;
  ch.r = b.radius;
  ch.lambda = k.lambda();
  ch.facet = ball_index;
  const Vec3 d = b.center - k.centers().at(static_cast<std::size_t>(ball_index));
  const double D = k.ball_radius() - b.radius;
  if (std::abs(d.norm() - D) > 1e-9 * k.ball_radius()) throw PreconditionError("facet does not touch the inscribed ball");
  if (D <= 0.0) {
    ch.axis = Vec3::UnitZ();  // a single ball: every direction is the same
  } else {
    ch.axis = d / d.norm();
  }
  ch.touch_point = b.center + b.radius * ch.axis;
  return ch;
}

Vec3 radial_project(const RadialChart& chart, const Vec3& q) {
  const Vec3 d = q - chart.center;
  const double n = d.norm();
  if (n == 0.0) throw InvalidParameter("cannot project the center");
  return chart.center + chart.r * d / n;
}

namespace {

void require_touching(const BallPolytope3& k, const InscribedBall& b) {
  for (int i : k.retained())
    if (std::find(b.touching.begin(), b.touching.end(), i) == b.touching.end())
      throw PreconditionError("every facet must touch the inscribed ball");
}

Vec3 any_orthogonal(const Vec3& u) {
  return (std::abs(u.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY()).cross(u).normalized();
}

}  // namespace

double projected_facet_area(const BallPolytope3& k, const InscribedBall& b, int ball_index) {
  require_touching(k, b);
  const double r = b.radius;
  if (k.retained().size() == 1) return 4.0 * kPi * r * r;
  const RadialChart ch = make_chart(k, b, ball_index);
  const Vec3 u = ch.axis;
  const Vec3 e1 = any_orthogonal(u);
  const Vec3 e2 = u.cross(e1);
  // Facet i owns direction w iff w . u_i >= w . u_j for every other touching ball j.
  struct Cut {
    double a;   // 1 - u . u_j
    Vec3 v;     // u_j, for the azimuthal part
  };
  std::vector<Cut> cuts;
  for (int j : k.retained()) {
    if (j == ball_index) continue;
    const Vec3 uj = (b.center - k.centers()[static_cast<std::size_t>(j)]).normalized();
    cuts.push_back({1.0 - u.dot(uj), uj});
  }
  auto polar_limit = [&](double th) {
    const Vec3 w = std::cos(th) * e1 + std::sin(th) * e2;
    double t = kPi;
    for (const Cut& c : cuts) t = std::min(t, std::atan2(c.a, w.dot(c.v)));
    return t;
  };
  // The cell's corners are the radial images of the facet's vertices: the directions with
  // equal projection on the three touch directions, taken exactly rather than from the
  // (matching-tolerance) vertex positions.
  std::vector<double> breaks{0.0, kTwoPi};
  auto touch_dir = [&](int j) { return Vec3((b.center - k.centers()[static_cast<std::size_t>(j)]).normalized()); };
  for (const Vertex& v : k.vertices()) {
    if (std::find(v.incident.begin(), v.incident.end(), ball_index) == v.incident.end()) continue;
    std::array<int, 2> others{};
    int n_other = 0;
    for (int j : v.incident)
      if (j != ball_index) others[static_cast<std::size_t>(n_other++)] = j;
    Vec3 d = (u - touch_dir(others[0])).cross(u - touch_dir(others[1]));
    if (d.dot(v.position - b.center) < 0.0) d = -d;
    double th = std::atan2(d.dot(e2), d.dot(e1));
    if (th < 0.0) th += kTwoPi;
    breaks.push_back(th);
  }
  // A bisector passing close to the pole makes the polar limit swing from ~0 to ~pi across an
  // azimuth window of width a / |v_perp| around w . v = 0; split there so the rule sees it.
  auto push_wrapped = [&](double th) {
    th = std::fmod(th, kTwoPi);
    if (th < 0.0) th += kTwoPi;
    breaks.push_back(th);
  };
  for (const Cut& c : cuts) {
    const double vp = std::hypot(c.v.dot(e1), c.v.dot(e2));
    if (vp == 0.0) continue;
    const double width = c.a / vp;
    if (width > 0.1) continue;
    const double phi = std::atan2(c.v.dot(e2), c.v.dot(e1));
    for (double side : {-0.5 * kPi, 0.5 * kPi}) {
      push_wrapped(phi + side);
      for (double s = width; s < 0.1; s *= 4.0) {
        push_wrapped(phi + side - s);
        push_wrapped(phi + side + s);
      }
    }
  }
  std::sort(breaks.begin(), breaks.end());
  // Slivers between nearly parallel touch directions carry almost no area; judge them on the
  // scale of the whole sphere.
  const quad::Result res =
      quad::integrate([&](double th) { return 1.0 - std::cos(polar_limit(th)); }, breaks, 1e-12, 16, 1e-11);
  return r * r * res.value;
}

Claim3Report claim3_check(const BallPolytope3& k) {
  Claim3Report rep;
  const InscribedBall b = inscribed_ball(k);
  rep.inradius = b.radius;
  for (const Facet& f : k.facets()) {
    rep.projected.push_back(projected_facet_area(k, b, f.ball_index));
    rep.total += rep.projected.back();
  }
  rep.sphere_area = 4.0 * kPi * b.radius * b.radius;
  rep.rel_deviation = std::abs(rep.total - rep.sphere_area) / rep.sphere_area;
  rep.passed = rep.rel_deviation <= 1e-5;
  return rep;
}

double ratio_F(double lambda, double r) {
  if (!(lambda > 0.0) || !(r > 0.0) || r * lambda > 1.0) throw InvalidParameter("ratio_F needs 0 < r lambda <= 1");
  return 1.0 / (lambda * r);
}

namespace {

bool is_radial_extension(const BallPolytope3& k, const Facet& f, const RadialChart& ch) {
  const double tol = 1e-8 * k.ball_radius();
  if (f.boundary_loops.empty()) return false;
  for (const auto& loop : f.boundary_loops)
    for (const ArcUse& use : loop) {
      const EdgeArc& e = k.edges()[static_cast<std::size_t>(use.edge)];
      for (int s = 0; s <= 4; ++s) {
        const Vec3 p = e.point(e.theta_start + e.arc_angle * s / 4.0);
        if (std::abs((p - ch.center).dot(ch.axis)) > tol) return false;
      }
    }
  return true;
}

}  // namespace

KeyClaimReport key_claim_check(const BallPolytope3& k) {
  KeyClaimReport rep;
  const InscribedBall b = inscribed_ball(k);
  require_touching(k, b);
  rep.inradius = b.radius;
  rep.bound = ratio_F(k.lambda(), b.radius);
  double proj_total = 0.0;
  bool all_extensions = true;
  rep.passed = true;
  for (const Facet& f : k.facets()) {
    FacetRatio fr;
    fr.ball = f.ball_index;
    fr.area = f.area;
    fr.projected = projected_facet_area(k, b, f.ball_index);
    fr.ratio = fr.area / fr.projected;
    if (k.retained().size() >= 2) fr.extension = is_radial_extension(k, f, make_chart(k, b, f.ball_index));
    all_extensions = all_extensions && fr.extension;
    rep.max_ratio = std::max(rep.max_ratio, fr.ratio);
    rep.passed = rep.passed && fr.ratio <= rep.bound + 1e-5;
    proj_total += fr.projected;
    rep.surface_area += fr.area;
    rep.facets.push_back(fr);
  }
  rep.chain_bound = rep.bound * proj_total;
  rep.lens_area = 4.0 * kPi * b.radius / k.lambda();
  rep.strict = !all_extensions && rep.surface_area < rep.lens_area;
  rep.passed = rep.passed && rep.surface_area <= rep.chain_bound * (1.0 + 1e-9) &&
               std::abs(rep.chain_bound - rep.lens_area) <= 1e-5 * rep.lens_area;
  return rep;
}

namespace {

void check_sector(double x, const Wedge& w) {
  if (!(x > 0.0) || x > 1.0) throw InvalidParameter("sector fraction must lie in (0, 1]");
  if (!(w.to > w.from) || w.to - w.from > kTwoPi * (1.0 + 1e-15)) throw InvalidParameter("wedge must span (0, 2 pi]");
}

}  // namespace

double sector_area(const RadialChart& ch, double x, const Wedge& w) {
  check_sector(x, w);
  const double top = 0.5 * kPi * x;
  const quad::Result res =
      quad::integrate([&](double t) { return ch.density(t) * std::sin(t); }, 0.0, top, 1e-13, 16);
  return (w.to - w.from) * ch.r * ch.r * res.value;
}

double sector_projected_area(const RadialChart& ch, double x, const Wedge& w) {
  check_sector(x, w);
  const double top = 0.5 * kPi * x;
  // 1 - cos(top), without cancellation for small top
  const double s = std::sin(0.5 * top);
  return (w.to - w.from) * ch.r * ch.r * 2.0 * s * s;
}

double sector_ratio(const RadialChart& ch, double x, const Wedge& w) {
  return sector_area(ch, x, w) / sector_projected_area(ch, x, w);
}

double sector_deficit(const RadialChart& ch, double x) {
  check_sector(x, Wedge{});
  const double f = ratio_F(ch.lambda, ch.r);
  const quad::Result res =
      quad::integrate([&](double t) { return (ch.density(t) - f) * std::sin(t); }, 0.0, 0.5 * kPi * x, 1e-13, 16);
  return res.value;
}

}  // namespace lch
