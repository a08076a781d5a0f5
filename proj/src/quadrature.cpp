#include "lch/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "lch/core.hpp"

namespace lch::quad {

namespace {

// Kronrod 31-point rule with its embedded 15-point Gauss rule, nodes on [0, 1] of [-1, 1].
struct Rule {
  std::vector<double> x, wk, wg;  // wg is zero at Kronrod-only nodes
};

const Rule& rule() {
  static const Rule r = [] {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    Rule q;
    const auto& kx = gauss_kronrod<double, 31>::abscissa();
    const auto& kw = gauss_kronrod<double, 31>::weights();
    q.x.assign(kx.begin(), kx.end());
    q.wk.assign(kw.begin(), kw.end());
    q.wg.assign(q.x.size(), 0.0);
    const auto& gx = gauss<double, 15>::abscissa();
    const auto& gw = gauss<double, 15>::weights();
    for (std::size_t j = 0; j < gx.size(); ++j)
      for (std::size_t i = 0; i < q.x.size(); ++i)
        if (std::abs(q.x[i] - gx[j]) < 1e-14) q.wg[i] = gw[j];
    return q;
  }();
  return r;
}

struct Segment {
  double a, b, value, error, l1;
  unsigned depth;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment apply_rule(const std::function<double(double)>& f, double a, double b, unsigned depth) {
  const Rule& q = rule();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double k = 0.0, g = 0.0, l1 = 0.0;
  for (std::size_t i = 0; i < q.x.size(); ++i) {
    const double f1 = f(mid + half * q.x[i]);
    const double f2 = q.x[i] == 0.0 ? 0.0 : f(mid - half * q.x[i]);
    if (!std::isfinite(f1) || !std::isfinite(f2)) throw NumericError("quadrature produced a non-finite value");
    k += q.wk[i] * (f1 + f2);
    g += q.wg[i] * (f1 + f2);
    l1 += q.wk[i] * (std::abs(f1) + std::abs(f2));
  }
  const double hk = half * k, hl1 = std::abs(half) * l1;
  // |K - G| with a roundoff floor, so noise in f cannot drive the subdivision.
  const double err = std::max(std::abs(half * (k - g)), 50.0 * std::numeric_limits<double>::epsilon() * hl1);
  return {a, b, hk, err, hl1, depth};
}

}  // namespace

// Globally adaptive: the segment with the largest error estimate is bisected until the total
// error meets the tolerance. (Boost's recursive driver sums unscaled leaf errors, so its
// estimate grows with depth whenever f carries roundoff noise.)
Result integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 unsigned max_depth, double abs_tol) {
  Result r;
  if (a == b) return r;
  std::priority_queue<Segment> heap;
  std::vector<Segment> done;
  Segment s0 = apply_rule(f, a, b, 0);
  double value = s0.value, error = s0.error, l1 = s0.l1;
  heap.push(s0);
  const std::size_t max_segments = std::size_t{1} << std::min(max_depth, 14u);
  while (!heap.empty() && error > std::max(rel_tol * l1, abs_tol) && heap.size() + done.size() < max_segments) {
    const Segment s = heap.top();
    heap.pop();
    if (s.depth >= max_depth) {
      done.push_back(s);
      continue;
    }
    const double m = 0.5 * (s.a + s.b);
    const Segment left = apply_rule(f, s.a, m, s.depth + 1), right = apply_rule(f, m, s.b, s.depth + 1);
    value += left.value + right.value - s.value;
    error += left.error + right.error - s.error;
    l1 += left.l1 + right.l1 - s.l1;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  r.value = r.error = r.l1 = 0.0;
  auto add = [&r](const Segment& s) {
    r.value += s.value;
    r.error += s.error;
    r.l1 += s.l1;
  };
  for (const Segment& s : done) add(s);
  while (!heap.empty()) {
    add(heap.top());
    heap.pop();
  }
  if (r.error > 100.0 * rel_tol * std::max(r.l1, 1e-300) && r.error > abs_tol) {
    std::ostringstream os;
    os << "quadrature did not converge on [" << a << ", " << b << "]: value " << r.value
       << ", error estimate " << r.error << ", L1 " << r.l1;
    throw NumericError(os.str());
  }
  return r;
}

Result integrate(const std::function<double(double)>& f, const std::vector<double>& breakpoints,
                 double rel_tol, unsigned max_depth, double abs_tol) {
  std::vector<double> pts = breakpoints;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Result total;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    Result piece = integrate(f, pts[k], pts[k + 1], rel_tol, max_depth, abs_tol);
    total.value += piece.value;
    total.error += piece.error;
    total.l1 += piece.l1;
  }
  return total;
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order) {
  using boost::math::quadrature::gauss;
  switch (order) {
    case 8: return gauss<double, 8>::integrate(f, a, b);
    case 16: return gauss<double, 16>::integrate(f, a, b);
    case 32: return gauss<double, 32>::integrate(f, a, b);
    case 64: return gauss<double, 64>::integrate(f, a, b);
    default: throw InvalidParameter("gauss_legendre: supported orders are 8, 16, 32, 64");
  }
}

}  // namespace lch::quad
