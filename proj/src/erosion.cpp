#include "lch/erosion.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "lch/inradius.hpp"
#include "lch/kernels.hpp"
#include "lch/quadrature.hpp"

namespace lch {

namespace {
// Depths closer than this (times 1/lambda) to the inradius are not built.
constexpr double kTopGap = 4e-9;
// Last grid sample; near-collapse slivers closer to r are too thin to classify reliably.
constexpr double kGridGap = 1e-6;
}  // namespace

BallPolytope3 inner_parallel(const BallPolytope3& k, double t) {
  const double R = k.ball_radius();
  if (!(t >= 0.0)) throw InvalidParameter("erosion depth must be nonnegative");
  const double r = inscribed_ball(k).radius;
  if (t >= r) throw EmptyBody("erosion depth reaches the inradius");
  if (t == 0.0) return k;
  return BallPolytope3::build(1.0 / (R - t), k.centers());
}

double eroded_area(const BallPolytope3& k, double t) { return kernels::eroded_sample(k, t).area; }

namespace {

// First depth after a whose signature differs from sig_a, given that hi's differs.
double bisect_event(const BallPolytope3& k, double a, const std::vector<std::int64_t>& sig_a, double hi, double tol) {
  double lo = a;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const kernels::ErodedSample s = kernels::eroded_sample(k, mid);
    if (!s.signature.empty() && s.signature == sig_a)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> events_from_samples(const BallPolytope3& k, const std::vector<double>& ts,
                                        const std::vector<kernels::ErodedSample>& samples) {
  const double tol = 1e-10 * k.ball_radius();
  std::vector<double> events;
  // Compare regular neighbours only; degenerate samples sit on events and are skipped.
  std::size_t prev = 0;
  while (prev < ts.size() && samples[prev].signature.empty()) ++prev;
  for (std::size_t i = prev + 1; i < ts.size(); ++i) {
    if (samples[i].signature.empty()) continue;
    double a = ts[prev];
    std::vector<std::int64_t> sig = samples[prev].signature;
    for (int guard = 0; guard < 16 && sig != samples[i].signature; ++guard) {
      const double e = bisect_event(k, a, sig, ts[i], tol);
      events.push_back(e);
      // continue past this event in case several fall between the two samples
      double b = std::min(ts[i], e + 4.0 * tol);
      kernels::ErodedSample s = kernels::eroded_sample(k, b);
      while (s.signature.empty() && b < ts[i]) {
        b = std::min(ts[i], b + 64.0 * tol);
        s = kernels::eroded_sample(k, b);
      }
      if (s.signature.empty()) break;
      a = b;
      sig = s.signature;
    }
    prev = i;
  }
  return events;
}

}  // namespace

namespace {

// Deepest depth at most t_max whose eroded body can be built. Near the inradius the body
// shrinks below the construction tolerances; the slice above the returned depth holds at
// most f(top) * (t_max - top) of volume since f decreases.
double resolvable_top(const BallPolytope3& k, double t_max) {
  const double R = k.ball_radius();
  for (double gap = kTopGap; gap < 1e-2; gap *= 4.0) {
    const double t = t_max - gap * R;
    if (t <= 0.0) break;
    try {
      kernels::eroded_sample(k, t);
      return t;
    } catch (const DegenerateBody&) {
    }
  }
  throw DegenerateBody("eroded bodies stay degenerate far below the inradius");
}

// Uniform grid on [0, t_max) below top, plus a final depth just short of t_max (or at top),
// so events in the last cell are bracketed too.
std::vector<double> event_grid(const BallPolytope3& k, double t_max, double top, int grid) {
  std::vector<double> ts;
  for (int i = 0; i < grid; ++i)
    if (t_max * i / grid < top) ts.push_back(t_max * i / grid);
  const double last = std::min(t_max - kGridGap * k.ball_radius(), top);
  if (last > ts.back()) ts.push_back(last);
  return ts;
}

}  // namespace

std::vector<double> find_events(const BallPolytope3& k, double t_max, int grid) {
  const double top = std::min(t_max, resolvable_top(k, inscribed_ball(k).radius));
  const std::vector<double> ts = event_grid(k, t_max, top, grid);
  const auto samples = kernels::omp::sample_erosion(k, ts);
  return events_from_samples(k, ts, samples);
}

ErosionProfile profile(const BallPolytope3& k, int n_samples) {
  if (n_samples < 2) throw InvalidParameter("profile needs at least two samples");
  ErosionProfile p;
  p.inradius = inscribed_ball(k).radius;
  const double r = p.inradius;
  const std::vector<double> ts = event_grid(k, r, resolvable_top(k, r), n_samples);
  std::vector<kernels::ErodedSample> samples = kernels::omp::sample_erosion(k, ts);
  p.events = events_from_samples(k, ts, samples);

  // Refine: event depths become samples, then split intervals whose relative change exceeds 1%,
  // largest change first, within a fixed budget.
  std::vector<double> all = ts;
  all.insert(all.end(), p.events.begin(), p.events.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<double> extra;
  for (double t : all)
    if (!std::binary_search(ts.begin(), ts.end(), t)) extra.push_back(t);
  std::vector<kernels::ErodedSample> es = kernels::omp::sample_erosion(k, extra);
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < ts.size(); ++i) pts.push_back({ts[i], samples[i].area});
  for (std::size_t i = 0; i < extra.size(); ++i) pts.push_back({extra[i], es[i].area});
  std::sort(pts.begin(), pts.end());

  const std::size_t budget = pts.size() + 4 * static_cast<std::size_t>(n_samples);
  const double min_width = 1e-6 * r;
  while (pts.size() < budget) {
    std::vector<double> mids;
    for (std::size_t i = 0; i + 1 < pts.size() && pts.size() + mids.size() < budget; ++i) {
      const double rel = std::abs(pts[i + 1].second - pts[i].second) / std::max(pts[i].second, 1e-300);
      bool near_event = false;
      for (double e : p.events) near_event = near_event || (e >= pts[i].first && e <= pts[i + 1].first);
      if ((rel > 0.01 || (near_event && rel > 0.002)) && pts[i + 1].first - pts[i].first > min_width)
        mids.push_back(0.5 * (pts[i].first + pts[i + 1].first));
    }
    if (mids.empty()) break;
    const auto ms = kernels::omp::sample_erosion(k, mids);
    for (std::size_t i = 0; i < mids.size(); ++i) pts.push_back({mids[i], ms[i].area});
    std::sort(pts.begin(), pts.end());
  }
  for (const auto& [t, a] : pts) {
    p.ts.push_back(t);
    p.areas.push_back(a);
  }
  return p;
}

double volume_via_profile(const BallPolytope3& k) {
  const double r = inscribed_ball(k).radius;
  const std::vector<double> events = find_events(k, r, 64);
  const double top = resolvable_top(k, r);
  std::vector<double> pts{0.0};
  for (double e : events)
    if (e > 0.0 && e < top) pts.push_back(e);
  pts.push_back(top);
  const quad::Result res = quad::integrate([&](double t) { return eroded_area(k, t); }, pts, 1e-11, 12);
  return res.value;
}

double initial_derivative(const BallPolytope3& k) {
  double edge = 0.0;
  for (const EdgeArc& e : k.edges()) edge += e.length * std::tan(0.5 * e.dihedral);
  return -2.0 * k.lambda() * k.surface_area() - 2.0 * edge;
}

double lens_profile(double lambda, double lens_inradius, double t) {
  const double R = 1.0 / lambda;
  if (t >= lens_inradius) return 0.0;
  const double d = 2.0 * (R - lens_inradius);
  const double s = R - t;
  return 4.0 * kPi * s * s - 2.0 * kPi * s * d;
}

ProfileComparison compare_profiles(const BallPolytope3& k, const LensParam& lens, int n_samples) {
  const double ak = k.surface_area();
  if (std::abs(ak - lens.surface_area) > 1e-9 * ak) throw PreconditionError("compare_profiles needs equal surface areas");
  if (std::abs(k.lambda() - lens.lambda) > 1e-15 * k.lambda()) throw PreconditionError("compare_profiles needs equal lambda");
  ProfileComparison c;
  const ErosionProfile p = profile(k, n_samples);
  c.inradius_k = p.inradius;
  c.inradius_l = lens.inradius;
  c.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.ts.size(); ++i) {
    const double gap = p.areas[i] - lens_profile(lens.lambda, lens.inradius, p.ts[i]);
    if (gap < c.min_gap) {
      c.min_gap = gap;
      c.t_at_min = p.ts[i];
    }
  }
  c.samples = p.ts.size();
  c.passed = c.min_gap >= -1e-9 * std::max(1.0, ak) && c.inradius_k >= c.inradius_l - 1e-9;
  return c;
}

ExpansionReport expansion_check(const BallPolytope3& k, double t) {
  ExpansionReport rep;
  const double lam = k.lambda();
  const std::vector<std::int64_t> sig0 = k.signature();
  for (int i = 1; i <= 8; ++i) {
    const kernels::ErodedSample s = kernels::eroded_sample(k, t * i / 8.0);
    if (s.signature != sig0) throw PreconditionError("combinatorial event inside the expansion interval");
  }
  double edge = 0.0;
  for (const EdgeArc& e : k.edges()) edge += e.length * std::tan(0.5 * e.dihedral);
  const double a0 = k.surface_area();
  for (int i = 0; i < 3; ++i) {
    const double s = t / std::pow(2.0, i);
    rep.ts[i] = s;
    const double model = (1.0 - lam * s) * (1.0 - lam * s) * a0 - 2.0 * s * edge;
    rep.remainders[i] = eroded_area(k, s) - model;
  }
  const double scale = std::max(1.0, a0);
  rep.exact = std::abs(rep.remainders[0]) <= 1e-12 * scale && std::abs(rep.remainders[1]) <= 1e-12 * scale &&
              std::abs(rep.remainders[2]) <= 1e-12 * scale;
  if (rep.exact) {
    rep.passed = true;
    return rep;
  }
  rep.ratio_first = rep.remainders[0] / rep.remainders[1];
  rep.ratio_second = rep.remainders[1] / rep.remainders[2];
  // order t^2: remainder / t^2 stable within 20% across halvings
  rep.passed = std::abs(rep.ratio_first / 4.0 - 1.0) <= 0.2 && std::abs(rep.ratio_second / 4.0 - 1.0) <= 0.2;
  return rep;
}

}  // namespace lch
