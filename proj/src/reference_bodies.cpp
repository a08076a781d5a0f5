#include "lch/reference_bodies.hpp"

#include <cmath>

#include "lch/core.hpp"
#include "lch/quadrature.hpp"

namespace lch {

namespace {
void require_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidParameter("lambda must be positive");
}
}  // namespace

Lens3Measures lens3_measures(double lambda, double alpha) {
  require_lambda(lambda);
  if (!(alpha > 0.0) || alpha > 0.5 * kPi + 1e-15) throw InvalidParameter("lens half-angle must lie in (0, pi/2]");
  const double h = 1.0 - std::cos(alpha);
  const double area = 4.0 * kPi * h / (lambda * lambda);
  const double al2 = area * lambda * lambda;
  const double vol = area * area * lambda * (12.0 * kPi - al2) / (96.0 * kPi * kPi);
  return {area, vol, h / lambda};
}

LensParam lens3_from_surface_area(double lambda, double area) {
  require_lambda(lambda);
  const double x = area * lambda * lambda / (4.0 * kPi);
  if (!(x > 0.0) || x > 1.0 + 1e-12) throw InvalidParameter("lens surface area must satisfy 0 < A lambda^2 <= 4 pi");
  LensParam p;
  p.lambda = lambda;
  p.alpha = std::acos(1.0 - std::min(x, 1.0));
  const Lens3Measures m = lens3_measures(lambda, p.alpha);
  p.inradius = std::min(x, 1.0) / lambda;
  p.surface_area = area;
  p.volume = m.volume;
  return p;
}

LensParam lens3_from_inradius(double lambda, double r) {
  require_lambda(lambda);
  const double x = r * lambda;
  if (!(x > 0.0) || x > 1.0 + 1e-12) throw InvalidParameter("lens inradius must satisfy 0 < r lambda <= 1");
  LensParam p;
  p.lambda = lambda;
  p.alpha = std::acos(1.0 - std::min(x, 1.0));
  const Lens3Measures m = lens3_measures(lambda, p.alpha);
  p.inradius = r;
  p.surface_area = m.surface_area;
  p.volume = m.volume;
  return p;
}

namespace {
void require_perimeter(double lambda, double perimeter) {
  require_lambda(lambda);
  const double x = perimeter * lambda;
  if (!(x > 0.0) || x > kTwoPi * (1.0 + 1e-12)) throw InvalidParameter("lens perimeter must satisfy 0 < P lambda <= 2 pi");
}
}  // namespace

double lens2_area(double lambda, double perimeter) {
  require_perimeter(lambda, perimeter);
  return perimeter / (2.0 * lambda) - std::sin(0.5 * perimeter * lambda) / (lambda * lambda);
}

double lens2_inradius(double lambda, double perimeter) {
  require_perimeter(lambda, perimeter);
  return (1.0 - std::cos(0.25 * perimeter * lambda)) / lambda;
}

double lens2_vertex_angle(double lambda, double perimeter) {
  require_perimeter(lambda, perimeter);
  return std::max(0.0, kPi - 0.5 * perimeter * lambda);
}

double log_sphere_area(int k) {
  if (k < 0) throw InvalidParameter("sphere dimension must be nonnegative");
  const double a = 0.5 * (k + 1);
  return std::log(2.0) + a * std::log(kPi) - std::lgamma(a);
}

double sphere_area(int k) { return std::exp(log_sphere_area(k)); }

namespace {

// log of the integral of exp(e * log(f(t)) - e * log(fmax)) g(t) dt plus e * log(fmax): the
// integrand is rescaled by its peak so that large exponents never underflow.
double log_power_integral(const std::function<double(double)>& base, double base_max, double exponent,
                          const std::function<double(double)>& weight, double a, double b) {
  const double lmax = std::log(base_max);
  auto f = [&](double t) {
    const double v = base(t);
    if (v <= 0.0) return 0.0;
    return std::exp(exponent * (std::log(v) - lmax)) * weight(t);
  };
  // The peak sits at the left end (t = 0); split so the adaptive rule resolves it at large n.
  std::vector<double> pts{a};
  if (exponent > 4.0) {
    const double width = (b - a) / std::sqrt(exponent);
    for (double s : {0.5, 1.0, 2.0, 4.0, 8.0})
      if (a + s * width < b) pts.push_back(a + s * width);
  }
  pts.push_back(b);
  const quad::Result r = quad::integrate(f, pts, 1e-12);
  if (!(r.value > 0.0)) throw NumericError("revolution integral vanished");
  return std::log(r.value) + exponent * lmax;
}

void require_dim(int n) {
  if (n < 2) throw InvalidParameter("dimension must be at least 2");
}

}  // namespace

RevolutionMeasures spindle_normalized(int n, double h1) {
  require_dim(n);
  if (!(h1 >= 0.0) || !(h1 < 1.0)) throw InvalidParameter("h1 must lie in [0, 1)");
  // x = sin(phi): area integrand (cos phi - h1)^{n-2}, volume integrand (cos phi - h1)^{n-1} cos phi,
  // both even in phi over [-acos h1, acos h1].
  const double phi0 = std::acos(h1);
  auto base = [h1](double p) { return std::cos(p) - h1; };
  auto one = [](double) { return 1.0; };
  auto cosw = [](double p) { return std::cos(p); };
  RevolutionMeasures m;
  m.log_surface_area = std::log(2.0) + log_power_integral(base, 1.0 - h1, n - 2, one, 0.0, phi0);
  m.log_volume = std::log(2.0) + log_power_integral(base, 1.0 - h1, n - 1, cosw, 0.0, phi0);
  m.surface_area = std::exp(m.log_surface_area);
  m.volume = std::exp(m.log_volume);
  return m;
}

RevolutionMeasures lens_nd_normalized(int n, double h2) {
  require_dim(n);
  if (!(h2 > 0.0) || h2 > 1.0) throw InvalidParameter("h2 must lie in (0, 1]");
  // x + sqrt(1 - h2^2) = cos(psi), psi in [0, asin h2]; two caps.
  // area integrand sin^{n-2} psi, volume integrand sin^n psi. The peak is at the right end,
  // so integrate in s = psi0 - psi.
  const double psi0 = std::asin(h2);
  auto base = [psi0](double s) { return std::sin(psi0 - s); };
  auto one = [](double) { return 1.0; };
  RevolutionMeasures m;
  m.log_surface_area = std::log(2.0) + log_power_integral(base, h2, n - 2, one, 0.0, psi0);
  m.log_volume = std::log(2.0) + log_power_integral(base, h2, n, one, 0.0, psi0);
  m.surface_area = std::exp(m.log_surface_area);
  m.volume = std::exp(m.log_volume);
  return m;
}

namespace {
RevolutionMeasures scale_revolution(RevolutionMeasures m, int n, double lambda) {
  const double ls = log_sphere_area(n - 2);
  const double ll = std::log(lambda);
  m.log_surface_area += ls - (n - 1) * ll;
  m.log_volume += ls - std::log(static_cast<double>(n - 1)) - n * ll;
  m.surface_area = std::exp(m.log_surface_area);
  m.volume = std::exp(m.log_volume);
  return m;
}
}  // namespace

RevolutionMeasures spindle_measures(int n, double lambda, double h1) {
  require_lambda(lambda);
  return scale_revolution(spindle_normalized(n, h1), n, lambda);
}

RevolutionMeasures lens_nd_measures(int n, double lambda, double h2) {
  require_lambda(lambda);
  return scale_revolution(lens_nd_normalized(n, h2), n, lambda);
}

LaplaceForms laplace_spindle_printed(int n, double h1) {
  const double c = std::sqrt(kPi / 2.0) / std::sqrt(static_cast<double>(n));
  return {c * std::pow(1.0 - h1, n - 2.5), c * std::pow(1.0 - h1, n - 1.5)};
}

LaplaceForms laplace_lens_printed(int n, double h2) {
  const double c = 2.0 / (std::sqrt(1.0 - h2 * h2) * n);
  return {c * std::pow(h2, n - 1), c * std::pow(h2, n + 1)};
}

LaplaceForms laplace_spindle(int n, double h1) {
  const double c = std::sqrt(kTwoPi) / std::sqrt(static_cast<double>(n));
  return {c * std::pow(1.0 - h1, n - 1.5), c * std::pow(1.0 - h1, n - 0.5)};
}

MatchReport match_and_compare(int n, double lambda, double h1) {
  if (n < 3) throw InvalidParameter("matched comparison needs n >= 3");
  require_lambda(lambda);
  MatchReport rep;
  rep.n = n;
  rep.lambda = lambda;
  rep.h1 = h1;
  const RevolutionMeasures sp = spindle_normalized(n, h1);
  const double target = sp.log_surface_area;
  double lo = 1e-12, hi = 1.0;
  if (lens_nd_normalized(n, lo).log_surface_area > target || lens_nd_normalized(n, hi).log_surface_area < target)
    throw NumericError("matched lens parameter is not bracketed by (0, 1]");
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    (lens_nd_normalized(n, mid).log_surface_area < target ? lo : hi) = mid;
  }
  rep.h2 = 0.5 * (lo + hi);
  const RevolutionMeasures le = lens_nd_normalized(n, rep.h2);
  if (std::abs(le.log_surface_area - target) > 1e-10) throw NumericError("matched lens area mismatch");
  const RevolutionMeasures sps = scale_revolution(sp, n, lambda);
  const RevolutionMeasures les = scale_revolution(le, n, lambda);
  rep.surface_area = sps.surface_area;
  rep.volume_spindle = sps.volume;
  rep.volume_lens = les.volume;
  rep.gap = (1.0 - h1) - rep.h2;
  rep.lens_smaller = les.log_volume < sps.log_volume;
  return rep;
}

}  // namespace lch
