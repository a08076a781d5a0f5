#include "lch/lambda_disk.hpp"

#include <cmath>
#include <complex>

namespace lch {
namespace {

using cplx = std::complex<double>;
cplx to_c(const Vec2& p) { return {p.x(), p.y()}; }
Vec2 to_v(const cplx& z) { return {z.real(), z.imag()}; }

// Disk automorphism sending p to the origin, and its inverse.
cplx mobius_to_origin(const cplx& p, const cplx& z) { return (z - p) / (1.0 - std::conj(p) * z); }
cplx mobius_from_origin(const cplx& p, const cplx& w) { return (w + p) / (1.0 + std::conj(p) * w); }

bool is_ideal(const Vec2& p) { return std::abs(p.norm() - 1.0) < 1e-12; }

// Chart coordinate of the point at signed geodesic distance a from the origin along a ray.
double chart_radius(double c, double a) {
  if (c < 0.0) return std::tanh(0.5 * a);
  if (c > 0.0) return std::tan(0.5 * a);
  return a;
}
double geodesic_radius(double c, double x) {
  if (c < 0.0) return 2.0 * std::atanh(x);
  if (c > 0.0) return 2.0 * std::atan(x);
  return x;
}

ChartDisk circumcircle(const Vec2& p, const Vec2& q, const Vec2& s) {
  const Vec2 b = q - p, d = s - p;
  const double den = 2.0 * cross2(b, d);
  if (std::abs(den) < 1e-300) throw NumericError("circumcircle of collinear points");
  const Vec2 off((d.y() * b.squaredNorm() - b.y() * d.squaredNorm()) / den,
                 (b.x() * d.squaredNorm() - d.x() * b.squaredNorm()) / den);
  return {p + off, off.norm()};
}

void check_regime(double c, double lambda, LambdaDisk2::Kind kind) {
  model::require_metric_space(ModelSpace{2, c});
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidParameter("lambda must be positive");
  using K = LambdaDisk2::Kind;
  K expected = K::Geodesic;
  if (c < 0.0) expected = lambda > 1.0 ? K::Geodesic : (lambda == 1.0 ? K::Horo : K::Equidistant);
  if (kind != expected) throw InvalidParameter("disk kind does not match the (curvature, lambda) regime");
}

}  // namespace

LambdaDisk2 LambdaDisk2::geodesic(double c, double lambda, const Vec2& center) {
  check_regime(c, lambda, Kind::Geodesic);
  if (!model::in_model_domain(c, center)) throw InvalidParameter("disk center outside the model domain");
  LambdaDisk2 d;
  d.kind_ = Kind::Geodesic;
  d.c_ = c;
  d.lambda_ = lambda;
  d.radius_ = model::lambda_sphere_radius(c, lambda);
  d.center_ = center;
  if (c > 0.0 && geodesic_radius(c, center.norm()) + d.radius_ >= kPi)
    throw InvalidParameter("spherical disk contains the chart pole");
  return d;
}

LambdaDisk2 LambdaDisk2::horo(double lambda, const Vec2& ideal, double offset) {
  check_regime(-1.0, lambda, Kind::Horo);
  if (!(ideal.norm() > 0.0) || !std::isfinite(offset)) throw InvalidParameter("invalid horodisk");
  LambdaDisk2 d;
  d.kind_ = Kind::Horo;
  d.c_ = -1.0;
  d.lambda_ = lambda;
  d.ideal_ = ideal.normalized();
  d.offset_ = offset;
  d.radius_ = 0.0;
  return d;
}

LambdaDisk2 LambdaDisk2::equidistant(double lambda, const Vec2& p, const Vec2& q) {
  check_regime(-1.0, lambda, Kind::Equidistant);
  if (p.norm() > 1.0 + 1e-12 || q.norm() > 1.0 + 1e-12) throw InvalidParameter("geodesic point outside the disk");
  if ((p - q).norm() < 1e-12) throw InvalidParameter("geodesic needs two distinct points");
  const cplx P = to_c(p), Q = to_c(q);
  Vec2 a, b;
  if (is_ideal(p) && is_ideal(q)) {
    a = p.normalized();
    b = q.normalized();
  } else if (!is_ideal(p)) {
    const cplx qq = mobius_to_origin(P, Q);
    const cplx dir = qq / std::abs(qq);
    a = to_v(mobius_from_origin(P, -dir));
    b = is_ideal(q) ? Vec2(q.normalized()) : to_v(mobius_from_origin(P, dir));
  } else {
    const cplx pp = mobius_to_origin(Q, P);
    const cplx dir = pp / std::abs(pp);
    a = p.normalized();
    b = to_v(mobius_from_origin(Q, -dir));
  }
  LambdaDisk2 d;
  d.kind_ = Kind::Equidistant;
  d.c_ = -1.0;
  d.lambda_ = lambda;
  d.radius_ = model::characteristic_distance(-1.0, lambda);
  d.a_ = a.normalized();
  d.b_ = b.normalized();
  return d;
}

LambdaDisk2 LambdaDisk2::supporting(double c, double lambda, const Vec2& u_in, double r) {
  if (!(r > 0.0)) throw InvalidParameter("supporting disk needs r > 0");
  if (!(u_in.norm() > 0.0)) throw InvalidParameter("supporting disk needs a direction");
  const Vec2 u = u_in.normalized();
  model::require_metric_space(ModelSpace{2, c});
  if (c < 0.0 && lambda == 1.0) return horo(lambda, -u, r);
  if (c < 0.0 && lambda < 1.0) {
    // Base geodesic perpendicular to u, crossing the u-axis at signed distance r - rr.
    const double rr = model::characteristic_distance(c, lambda);
    const double x0 = std::tanh(0.5 * (r - rr));
    const cplx rot = to_c(u);
    const cplx a = rot * mobius_from_origin(cplx(x0, 0.0), cplx(0.0, 1.0));
    const cplx b = rot * mobius_from_origin(cplx(x0, 0.0), cplx(0.0, -1.0));
    return equidistant(lambda, to_v(a), to_v(b));
  }
  const double rho = model::lambda_sphere_radius(c, lambda);
  return geodesic(c, lambda, chart_radius(c, r - rho) * u);
}

double LambdaDisk2::signed_distance(const Vec2& p) const {
  if (!model::in_model_domain(c_, p)) throw InvalidParameter("point outside the model domain");
  switch (kind_) {
    case Kind::Geodesic:
      return radius_ - model::metric_distance(ModelSpace{2, c_}, p, center_);
    case Kind::Horo: {
      const double busemann = std::log((ideal_ - p).squaredNorm() / (1.0 - p.squaredNorm()));
      return offset_ - busemann;
    }
    case Kind::Equidistant:
      return radius_ - model::signed_distance_to_geodesic(a_, b_, p);
  }
  return 0.0;
}

ChartDisk LambdaDisk2::chart_disk(double inset) const {
  switch (kind_) {
    case Kind::Geodesic: {
      const double s = radius_ - inset;
      if (!(s > 0.0)) throw EmptyBody("disk shrunk to nothing");
      if (c_ == 0.0) return {center_, s};
      const double zr = center_.norm();
      const Vec2 v = zr > 0.0 ? Vec2(center_ / zr) : Vec2(Vec2::UnitX());
      const double a = geodesic_radius(c_, zr);
      if (c_ > 0.0 && a + s >= kPi) throw InvalidParameter("spherical disk contains the chart pole");
      const double lo = chart_radius(c_, a - s), hi = chart_radius(c_, a + s);
      return {0.5 * (lo + hi) * v, 0.5 * (hi - lo)};
    }
    case Kind::Horo: {
      const double th = std::tanh(0.5 * (offset_ - inset));
      return {0.5 * (1.0 - th) * ideal_, 0.5 * (1.0 + th)};
    }
    case Kind::Equidistant: {
      const double d = radius_ - inset;
      if (!(d > 0.0)) throw EmptyBody("equidistant domain shrunk past its base geodesic");
      const Vec2 t = (b_ - a_).normalized();
      const Vec2 left(-t.y(), t.x());
      const Vec2 mid = a_ + b_;
      Vec2 v = left;
      double tm = 0.0;
      if (mid.norm() > 1e-12) {
        v = mid.normalized();
        const double half = 0.5 * safe_acos(a_.dot(b_));
        tm = 2.0 * std::atanh((1.0 - std::sin(half)) / std::cos(half));
      }
      const double tc = tm + d * left.dot(v);
      const Vec2 pc = std::tanh(0.5 * tc) * v;
      ChartDisk cd = circumcircle(a_, b_, pc);
      // The base geodesic point tm * v lies inside the region; make sure the chart disk agrees.
      if ((std::tanh(0.5 * tm) * v - cd.center).norm() >= cd.radius)
        throw NumericError("equidistant chart region is not a disk interior");
      return cd;
    }
  }
  return {};
}

Vec2 LambdaDisk2::boundary_sample() const {
  switch (kind_) {
    case Kind::Geodesic: {
      const ChartDisk cd = chart_disk();
      const Vec2 dir = center_.norm() > 0.0 ? Vec2(Vec2(-center_.y(), center_.x()).normalized()) : Vec2::UnitY();
      return cd.center + cd.radius * dir;
    }
    case Kind::Horo:
      return -std::tanh(0.5 * offset_) * ideal_;
    case Kind::Equidistant: {
      const ChartDisk cd = chart_disk();
      // the point of the chart circle nearest the origin is inside the unit disk
      const Vec2 dir = cd.center.norm() > 0.0 ? Vec2(-cd.center.normalized()) : Vec2::UnitX();
      return cd.center + cd.radius * dir;
    }
  }
  return Vec2::Zero();
}

double LambdaDisk2::boundary_geodesic_curvature() const {
  const ChartDisk cd = chart_disk();
  const Vec2 p = boundary_sample();
  const Vec2 n_out = (p - cd.center).normalized();
  Vec2 grad_log_mu = Vec2::Zero();
  if (c_ < 0.0) grad_log_mu = 2.0 * p / (1.0 - p.squaredNorm());
  if (c_ > 0.0) grad_log_mu = -2.0 * p / (1.0 + p.squaredNorm());
  return (1.0 / cd.radius + grad_log_mu.dot(n_out)) / model::conformal_factor(c_, p);
}

namespace model {

double signed_distance_to_geodesic(const Vec2& a, const Vec2& b, const Vec2& p) {
  if (!in_model_domain(-1.0, p)) throw InvalidParameter("point outside the unit disk");
  const cplx P = to_c(p);
  const Vec2 aa = to_v(mobius_to_origin(P, to_c(a))).normalized();
  const Vec2 bb = to_v(mobius_to_origin(P, to_c(b))).normalized();
  // distance from the origin to the geodesic with ideal ends aa, bb is asinh(cot(theta/2))
  const double dist = std::asinh((aa + bb).norm() / (aa - bb).norm());
  const double side = cross2(bb - aa, -aa);
  return side >= 0.0 ? dist : -dist;
}

double signed_distance_to_lambda_disk(const ModelSpace& space, const LambdaDisk2& disk, const Vec2& p) {
  require_metric_space(space);
  if (space.curvature != disk.curvature()) throw InvalidParameter("disk belongs to a different model space");
  return disk.signed_distance(p);
}

}  // namespace model
}  // namespace lch
