#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lch/arc_polygon2.hpp"
#include "lch/harness.hpp"
#include "lch/reference_bodies.hpp"
#include "support.hpp"

using namespace lch;
using lch::test::rel_err;

namespace {

struct Regime {
  double c, lambda;
};
constexpr Regime kRegimes[] = {{0, 1}, {0, 2}, {1, 1}, {1, 0.5}, {-1, 2}, {-1, 1}, {-1, 0.5}};

ArcPolygon2 regime_polygon(const Regime& g, std::uint64_t trial) {
  SweepConfig cfg;
  cfg.dim = 2;
  cfg.curvature = g.c;
  cfg.lambda = g.lambda;
  cfg.seed = 99;
  return random_polygon(sweep_spec(cfg, trial));
}

// Model-metric area by Monte Carlo in the chart, weighted by the squared conformal factor.
std::pair<double, double> mc_area(const ArcPolygon2& k, int n, std::uint64_t seed) {
  Vec2 lo(-1e300, -1e300), hi(1e300, 1e300);
  for (int i : k.retained()) {
    const ChartDisk& d = k.chart_disks()[i];
    lo = lo.cwiseMax(d.center - Vec2::Constant(d.radius));
    hi = hi.cwiseMin(d.center + Vec2::Constant(d.radius));
  }
  const double box = (hi - lo).prod();
  SplitMix64 rng(seed);
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    const Vec2 p(rng.uniform(lo.x(), hi.x()), rng.uniform(lo.y(), hi.y()));
    double w = 0;
    if (k.contains(p)) {
      const double mu = model::conformal_factor(k.curvature(), p);
      w = mu * mu * box;
    }
    s += w;
    s2 += w * w;
  }
  const double mean = s / n;
  return {mean, std::sqrt((s2 / n - mean * mean) / n)};
}

// max over p of min_i signed distance to the disks, by compass search from several starts.
double brute_inradius(const ArcPolygon2& k, Vec2 start) {
  auto f = [&](const Vec2& p) {
    if (!model::in_model_domain(k.curvature(), p)) return -1e300;
    double m = 1e300;
    for (int i : k.retained()) m = std::min(m, k.disks()[i].signed_distance(p));
    return m;
  };
  Vec2 p = start;
  double fp = f(p);
  for (double step = 0.1; step > 1e-12;) {
    bool moved = false;
    for (int d = 0; d < 8; ++d) {
      const Vec2 q = p + step * Vec2(std::cos(d * kPi / 4), std::sin(d * kPi / 4));
      const double fq = f(q);
      if (fq > fp) {
        p = q;
        fp = fq;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return fp;
}

}  // namespace

TEST_CASE("euclidean two-disk polygon is the 2-D lens") {
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (double s : {0.1, 0.5, 0.9}) {
      const double h = s / lambda;
      const ArcPolygon2 k = ArcPolygon2::euclidean(lambda, {Vec2(-h, 0), Vec2(h, 0)});
      CHECK(k.is_lens());
      const double theta = 2 * std::acos(s);  // central angle of each arc
      CHECK(rel_err(k.perimeter(), 2 * theta / lambda) < 1e-12);
      CHECK(rel_err(k.area(), lens2_area(lambda, k.perimeter())) < 1e-12);
      REQUIRE(k.vertices().size() == 2);
      for (const Vertex2& v : k.vertices())
        CHECK(v.turning == doctest::Approx(lens2_vertex_angle(lambda, k.perimeter())).epsilon(1e-12));
      const InscribedDisk b = inradius2(k);
      CHECK(rel_err(b.radius, lens2_inradius(lambda, k.perimeter())) < 1e-9);
    }
  }
}

TEST_CASE("single disk and redundant disks") {
  const ArcPolygon2 one = ArcPolygon2::euclidean(2.0, {Vec2(0.3, 0.1)});
  CHECK(one.perimeter() == doctest::Approx(kPi));
  CHECK(one.area() == doctest::Approx(kPi / 4));
  CHECK(one.vertices().empty());
  const ArcPolygon2 k = ArcPolygon2::euclidean(1.0, {Vec2(0.2, 0), Vec2(-0.2, 0), Vec2(0, 0)});
  CHECK(k.redundant() == std::vector<int>{2});
  CHECK_THROWS_AS(ArcPolygon2::euclidean(1.0, {Vec2(1.5, 0), Vec2(-1.5, 0)}), EmptyBody);
}

TEST_CASE("areas agree with Monte Carlo in every regime") {
  for (const Regime& g : kRegimes) {
    for (std::uint64_t t = 0; t < 3; ++t) {
      const ArcPolygon2 k = regime_polygon(g, t);
      const auto [est, se] = mc_area(k, 200000, 7 + t);
      CHECK(std::abs(k.area() - est) < 4 * se + 1e-9);
      CHECK(rel_err(area2_green(k), k.area()) < 1e-9);
    }
  }
}

TEST_CASE("curved regimes satisfy the turning identity") {
  for (const Regime& g : kRegimes) {
    for (std::uint64_t t = 0; t < 20; ++t) {
      const ArcPolygon2 k = regime_polygon(g, t);
      CHECK(std::abs(total_turning_defect(k)) < 1e-9);
      if (g.c != 0) CHECK(rel_err(area2_turning(k), area2_green(k)) < 1e-8);
    }
  }
}

TEST_CASE("boundary arcs have curvature lambda") {
  for (const Regime& g : kRegimes) {
    const ArcPolygon2 k = regime_polygon(g, 4);
    for (int i : k.retained()) CHECK(k.disks()[i].boundary_geodesic_curvature() == doctest::Approx(g.lambda).epsilon(1e-9));
  }
}

TEST_CASE("inscribed disk against compass search") {
  for (const Regime& g : kRegimes) {
    for (std::uint64_t t = 0; t < 5; ++t) {
      const ArcPolygon2 k = regime_polygon(g, t);
      const InscribedDisk b = inradius2(k);
      double best = -1e300;
      for (const Vec2& s : {Vec2(0, 0), Vec2(0.05, 0), Vec2(0, -0.05), b.center})
        best = std::max(best, brute_inradius(k, s));
      CHECK(std::abs(b.radius - best) < 1e-7);
      for (int i : k.retained()) CHECK(k.disks()[i].signed_distance(b.center) >= b.radius - 1e-9);
    }
  }
}

TEST_CASE("generated polygons have the requested inradius") {
  for (const Regime& g : kRegimes) {
    SweepConfig cfg;
    cfg.dim = 2;
    cfg.curvature = g.c;
    cfg.lambda = g.lambda;
    for (std::size_t t = 0; t < 10; ++t) {
      const GenSpec s = sweep_spec(cfg, t);
      CHECK(inradius2(random_polygon(s)).radius == doctest::Approx(s.inradius).epsilon(1e-7));
    }
  }
}

TEST_CASE("euclidean vertex angles obey the lens constraints") {
  for (std::uint64_t t = 0; t < 100; ++t) {
    const ArcPolygon2 k = regime_polygon({0, 1 + (t % 3) * 0.5}, t);
    const ConstraintsReport c = constraints_check(k);
    CHECK(c.passed);
    CHECK(c.sum_gamma == doctest::Approx(2 * c.gamma_star).epsilon(1e-9));
    const GoalReport gr = goal_inequality_check(k);
    CHECK(gr.passed);
    CHECK(gr.equality == k.is_lens());
    const Rip2dReport r = rip2d_check(k);
    CHECK(r.passed);
    CHECK(r.area >= r.lens_area - 1e-12);
  }
}

TEST_CASE("goal inequality on explicit angle sets") {
  const double gs = 1.0;
  const std::vector<double> lens{gs, gs};
  CHECK(goal_inequality(lens, gs).equality);
  const std::vector<double> three(3, 2 * gs / 3);
  const GoalReport r3 = goal_inequality(three, gs);
  CHECK(r3.passed);
  CHECK(!r3.equality);
  CHECK(r3.lhs == doctest::Approx(3 * std::tan(gs / 3)));
  const std::vector<double> bad{gs, gs, 0.5};
  CHECK(!goal_inequality(bad, gs).passed);
}

TEST_CASE("initial derivative of the eroded perimeter") {
  for (std::uint64_t t = 0; t < 10; ++t) {
    const ArcPolygon2 k = regime_polygon({0, 1}, t);
    std::vector<Vec2> centers;
    for (const LambdaDisk2& d : k.disks()) centers.push_back(d.center());
    const double h = 1e-6;
    const double rebuilt = ArcPolygon2::euclidean(1.0 / (1.0 - h), centers).perimeter();
    CHECK(eroded_perimeter(k, h) == doctest::Approx(rebuilt).epsilon(1e-12));
    const double fd = (eroded_perimeter(k, h) - eroded_perimeter(k, 0.0)) / h;
    CHECK(fd == doctest::Approx(initial_derivative_2d(k)).epsilon(1e-4));
  }
}

TEST_CASE("model lenses") {
  for (const Regime& g : kRegimes) {
    SweepConfig cfg;
    cfg.dim = 2;
    cfg.curvature = g.c;
    cfg.lambda = g.lambda;
    for (std::size_t t = 0; t < 5; ++t) {
      const double r = sweep_spec(cfg, t).inradius;
      const ArcPolygon2 l = model_lens(g.c, g.lambda, r);
      CHECK(l.is_lens());
      CHECK(inradius2(l).radius == doctest::Approx(r).epsilon(1e-8));
      CHECK(model_lens_inradius_for_perimeter(g.c, g.lambda, l.perimeter()) == doctest::Approx(r).epsilon(1e-8));
      if (g.c == 0) CHECK(rel_err(l.area(), lens2_area(g.lambda, l.perimeter())) < 1e-12);
    }
  }
}

TEST_CASE("reverse inradius inequality in every regime") {
  for (const Regime& g : kRegimes) {
    for (std::uint64_t t = 0; t < 30; ++t) {
      const TheoremB2Report r = theoremB_2d_check(regime_polygon(g, t));
      CHECK(r.passed);
      CHECK(r.margin >= -1e-9);
    }
  }
}

TEST_CASE("common point of chart disks") {
  const std::vector<ChartDisk> yes{{Vec2(0, 0), 1.0}, {Vec2(1.5, 0), 1.0}, {Vec2(0.7, 0.8), 0.5}};
  Vec2 w;
  REQUIRE(disks_intersect(yes, 0.0, &w));
  for (const ChartDisk& d : yes) CHECK((w - d.center).norm() <= d.radius + 1e-12);
  const std::vector<ChartDisk> no{{Vec2(0, 0), 1.0}, {Vec2(1.5, 0), 1.0}, {Vec2(0.75, 1.2), 0.5}};
  CHECK(!disks_intersect(no, 0.0));
}
