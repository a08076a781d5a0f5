#include "lch/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <random>

#include "lch/erosion.hpp"
#include "lch/gauss_bonnet.hpp"
#include "lch/inradius.hpp"
#include "lch/kernels.hpp"
#include "lch/meb.hpp"
#include "lch/projection_ratio.hpp"
#include "lch/reference_bodies.hpp"
#include "lch/rng.hpp"

namespace lch {

namespace {
constexpr int kMaxDraws = 10000;
}

void validate(const GenSpec& s) {
  if (s.dim != 2 && s.dim != 3) throw InvalidParameter("dim must be 2 or 3");
  if (s.m < 2) throw InvalidParameter("m must be at least 2");
  if (!(s.lambda > 0.0) || !std::isfinite(s.lambda)) throw InvalidParameter("lambda must be positive");
  if (s.dim == 3 && s.curvature != 0.0) throw InvalidParameter("3-D bodies are Euclidean");
  if (s.curvature != -1.0 && s.curvature != 0.0 && s.curvature != 1.0) throw InvalidParameter("curvature must be -1, 0 or 1");
  if (!(s.inradius > 0.0)) throw InvalidParameter("inradius must be positive");
  if (s.curvature == 0.0 && !(s.inradius < 1.0 / s.lambda)) throw InvalidParameter("inradius must be below 1/lambda");
  if (s.curvature == 1.0 && !(s.inradius < model::lambda_sphere_radius(1.0, s.lambda)))
    throw InvalidParameter("inradius must be below the lambda-circle radius");
  if (s.curvature == -1.0) {
    if (s.lambda > 1.0 && !(s.inradius < model::lambda_sphere_radius(-1.0, s.lambda)))
      throw InvalidParameter("inradius must be below the lambda-circle radius");
    if (s.lambda < 1.0 && !(s.inradius < model::characteristic_distance(-1.0, s.lambda)))
      throw InvalidParameter("inradius must be below the characteristic distance");
  }
}

Body3 random_polytope_spec(const GenSpec& spec) {
  validate(spec);
  if (spec.dim != 3) throw InvalidParameter("random_polytope needs dim 3");
  SplitMix64 rng(spec.seed);
  std::normal_distribution<double> normal;
  const double d = spec.inradius - 1.0 / spec.lambda;
  auto direction = [&] {
    for (;;) {
      const Vec3 g(normal(rng), normal(rng), normal(rng));
      const double n = g.norm();
      if (n > 1e-12) return Vec3(g / n);
    }
  };
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    std::vector<Vec3> u;
    u.push_back(direction());
    if (spec.m == 2) {
      u.push_back(-u[0]);
    } else if (spec.m == 3) {
      // Three directions surround the origin only inside a common plane.
      const Vec3 n = direction();
      const Vec3 e1 = n.cross(u[0]).normalized();
      const Vec3 e2 = n.cross(e1);
      u.clear();
      for (int k = 0; k < 3; ++k) {
        const double a = rng.uniform(0.0, kTwoPi);
        u.push_back(std::cos(a) * e1 + std::sin(a) * e2);
      }
      if (!halfspace_condition(u, Vec3::Zero())) continue;
    } else {
      for (int k = 1; k < spec.m; ++k) u.push_back(direction());
      if (!halfspace_condition(u, Vec3::Zero())) continue;
    }
    Body3 b;
    b.lambda = spec.lambda;
    for (const Vec3& x : u) b.centers.push_back(d * x);
    try {
      BallPolytope3::build(b.lambda, b.centers);
    } catch (const DegenerateBody&) {
      continue;
    }
    return b;
  }
  throw GenerationError("no admissible direction set within the rejection budget");
}

BallPolytope3 random_polytope(const GenSpec& spec) { return build(random_polytope_spec(spec)); }

Body2 random_polygon_spec(const GenSpec& spec) {
  validate(spec);
  if (spec.dim != 2) throw InvalidParameter("random_polygon needs dim 2");
  SplitMix64 rng(spec.seed);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    std::vector<Vec2> u;
    const double a0 = rng.uniform(0.0, kTwoPi);
    u.push_back(Vec2(std::cos(a0), std::sin(a0)));
    if (spec.m == 2) {
      u.push_back(-u[0]);
    } else {
      for (int k = 1; k < spec.m; ++k) {
        const double a = rng.uniform(0.0, kTwoPi);
        u.push_back(Vec2(std::cos(a), std::sin(a)));
      }
      if (!halfspace_condition(u, Vec2::Zero())) continue;
    }
    Body2 b;
    b.lambda = spec.lambda;
    b.curvature = spec.curvature;
    for (const Vec2& x : u) b.disks.push_back(LambdaDisk2::supporting(spec.curvature, spec.lambda, x, spec.inradius));
    try {
      build(b);
    } catch (const DegenerateBody&) {
      continue;
    } catch (const NonCompact&) {
      continue;
    }
    return b;
  }
  throw GenerationError("no admissible direction set within the rejection budget");
}

ArcPolygon2 random_polygon(const GenSpec& spec) { return build(random_polygon_spec(spec)); }

McEstimate mc_volume(const BallPolytope3& k, std::uint64_t n_samples, std::uint64_t seed) {
  if (n_samples < 1000) throw InvalidParameter("Monte Carlo volume needs at least 1000 samples");
  const kernels::McCount c = kernels::omp::mc_volume(k, n_samples, seed);
  const double box = (c.box_hi - c.box_lo).prod();
  const double p = static_cast<double>(c.hits) / static_cast<double>(c.samples);
  McEstimate e;
  e.samples = c.samples;
  e.estimate = box * p;
  e.std_error = box * std::sqrt(p * (1.0 - p) / static_cast<double>(c.samples));
  return e;
}

SurfaceOracle surface_oracle(const BallPolytope3& k, double t) {
  const double r = inscribed_ball(k).radius;
  if (!(t > 0.0) || t >= 0.1 * r) throw InvalidParameter("surface oracle needs 0 < t < r(K) / 10");
  const double v = k.volume();
  auto quotient = [&](double s) { return (v - inner_parallel(k, s).volume()) / s; };
  SurfaceOracle o;
  o.coarse = quotient(t);
  o.fine = quotient(0.5 * t);
  o.extrapolated = 2.0 * o.fine - o.coarse;
  return o;
}

RipReport rip_check(const BallPolytope3& k) {
  RipReport r;
  r.surface_area = k.surface_area();
  r.volume = k.volume();
  r.lens_volume = lens3_from_surface_area(k.lambda(), r.surface_area).volume;
  r.margin = r.volume - r.lens_volume;
  r.has_vertex = !k.vertices().empty();
  r.passed = r.margin >= -1e-12 * std::max(1.0, r.volume) && (!r.has_vertex || r.margin > 1e-8);
  return r;
}

GenSpec sweep_spec(const SweepConfig& cfg, std::size_t trial) {
  SplitMix64 rng = SplitMix64::stream(cfg.seed, trial);
  GenSpec s;
  s.dim = cfg.dim;
  s.lambda = cfg.lambda;
  s.curvature = cfg.curvature;
  s.m = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, cfg.m_max - 1)));
  double cap = 1.0 / cfg.lambda;
  if (cfg.curvature == 1.0 || (cfg.curvature == -1.0 && cfg.lambda > 1.0))
    cap = model::lambda_sphere_radius(cfg.curvature, cfg.lambda);
  else if (cfg.curvature == -1.0 && cfg.lambda < 1.0)
    cap = model::characteristic_distance(-1.0, cfg.lambda);
  else if (cfg.curvature == -1.0)
    cap = 2.0;  // horodisks: any inradius is admissible
  s.inradius = cap * rng.uniform(0.05, 0.95);
  s.seed = rng();
  return s;
}

namespace {

using Values = std::map<std::string, double>;

// Returns failing checks as (name, margin, detail).
std::vector<std::tuple<std::string, double, std::string>> run_checks3(const GenSpec& s, Values& v) {
  std::vector<std::tuple<std::string, double, std::string>> fails;
  const BallPolytope3 k = random_polytope(s);
  const RipReport rip = rip_check(k);
  v["surface_area"] = rip.surface_area;
  v["volume"] = rip.volume;
  v["lens_volume"] = rip.lens_volume;
  v["rip"] = rip.margin;
  if (!rip.passed) fails.emplace_back("rip", rip.margin, "volume below the lens");
  const ReverseInradiusReport ir = verify_reverse_inradius(k);
  v["inradius"] = ir.margin;
  if (!ir.passed) fails.emplace_back("inradius", ir.margin, "inradius below the lens");
  const GBReport gb = gb_total(k);
  const double gb_err = std::abs(gb.grand_total - 4.0 * kPi);
  v["gb"] = -gb_err;
  if (gb_err >= 1e-9) fails.emplace_back("gb", -gb_err, "spherical image does not total 4 pi");
  const KeyClaimReport kc = key_claim_check(k);
  v["keyclaim"] = kc.bound - kc.max_ratio;
  if (!kc.passed) fails.emplace_back("keyclaim", kc.bound - kc.max_ratio, "facet ratio above the lens ratio");
  return fails;
}

std::vector<std::tuple<std::string, double, std::string>> run_checks2(const GenSpec& s, Values& v) {
  std::vector<std::tuple<std::string, double, std::string>> fails;
  const ArcPolygon2 k = random_polygon(s);
  v["perimeter"] = k.perimeter();
  v["area"] = k.area();
  if (s.curvature == 0.0) {
    const Rip2dReport rip = rip2d_check(k);
    v["rip2d"] = rip.margin;
    if (!rip.passed) fails.emplace_back("rip2d", rip.margin, "area below the lens");
    const GoalReport g = goal_inequality_check(k);
    v["goal2d"] = g.rhs - g.lhs;
    if (!g.passed) fails.emplace_back("goal2d", g.rhs - g.lhs, "angle sum above the lens");
  }
  const TheoremB2Report b = theoremB_2d_check(k);
  v["inradius2d"] = b.margin;
  if (!b.passed) fails.emplace_back("inradius2d", b.margin, "inradius below the lens");
  return fails;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
  if (cfg.trials == 0) throw InvalidParameter("sweep needs at least one trial");
  if (cfg.m_max < 2) throw InvalidParameter("m-max must be at least 2");
  const auto t0 = std::chrono::steady_clock::now();
  SweepReport rep;
  rep.trials = cfg.trials;
  rep.rows.resize(cfg.trials);
  std::vector<std::vector<Violation>> per_trial(cfg.trials);
  kernels::omp::map_trials(cfg.trials, [&](std::size_t i) {
    SweepRow& row = rep.rows[i];
    row.trial = i;
    row.spec = sweep_spec(cfg, i);
    try {
      const auto fails = cfg.dim == 3 ? run_checks3(row.spec, row.values) : run_checks2(row.spec, row.values);
      for (const auto& [name, margin, detail] : fails) per_trial[i].push_back({i, row.spec, name, margin, detail});
    } catch (const Error& e) {
      per_trial[i].push_back({i, row.spec, "error", 0.0, e.what()});
    }
  });
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    for (Violation& v : per_trial[i]) rep.violations.push_back(std::move(v));
    for (const auto& [name, value] : rep.rows[i].values) {
      if (name == "surface_area" || name == "volume" || name == "lens_volume" || name == "perimeter" || name == "area")
        continue;
      auto it = rep.min_margins.find(name);
      if (it == rep.min_margins.end())
        rep.min_margins[name] = value;
      else
        it->second = std::min(it->second, value);
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.mean_trial_seconds = rep.seconds / static_cast<double>(cfg.trials);
  return rep;
}

void write_sweep_csv(const SweepReport& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError(path + ": cannot write");
  std::vector<std::string> cols;
  for (const SweepRow& row : r.rows)
    for (const auto& kv : row.values)
      if (std::find(cols.begin(), cols.end(), kv.first) == cols.end()) cols.push_back(kv.first);
  std::sort(cols.begin(), cols.end());
  out << "trial,seed,m,inradius,lambda,dim,curvature";
  for (const auto& c : cols) out << ',' << c;
  out << ",violations\n";
  char buf[64];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  std::vector<int> vcount(r.rows.size(), 0);
  for (const Violation& v : r.violations) ++vcount[v.trial];
  for (const SweepRow& row : r.rows) {
    out << row.trial << ',' << row.spec.seed << ',' << row.spec.m << ',' << num(row.spec.inradius) << ','
        << num(row.spec.lambda) << ',' << row.spec.dim << ',' << num(row.spec.curvature);
    for (const auto& c : cols) {
      auto it = row.values.find(c);
      out << ',' << (it == row.values.end() ? std::string() : num(it->second));
    }
    out << ',' << vcount[row.trial] << '\n';
  }
}

}  // namespace lch
