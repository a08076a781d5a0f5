#include <doctest.h>

#include <cmath>

#include "lch/harness.hpp"
#include "lch/inradius.hpp"
#include "lch/projection_ratio.hpp"
#include "lch/reference_bodies.hpp"
#include "support.hpp"

using namespace lch;
using lch::test::rel_err;

namespace {

// Index of the ball through which the ray o + s d leaves K.
int exit_ball(const BallPolytope3& k, const Vec3& o, const Vec3& d) {
  const double R = k.ball_radius();
  double best = 1e300;
  int arg = -1;
  for (int i : k.retained()) {
    const Vec3 w = o - k.centers()[i];
    const double b = w.dot(d);
    const double s = -b + std::sqrt(b * b - (w.squaredNorm() - R * R));
    if (s < best) {
      best = s;
      arg = i;
    }
  }
  return arg;
}

// Facet-sphere cap hit by the cone of polar half-angle t0 around the chart axis, per radian of wedge.
double cap_area_per_radian(const RadialChart& ch, double t0) {
  const Vec3 u = ch.axis;
  Vec3 e = u.unitOrthogonal();
  const Vec3 d = std::cos(t0) * u + std::sin(t0) * e;
  const Vec3 q = ch.center + ch.ray_length(t0) * d;
  const Vec3 c = ch.center - ch.offset() * u;
  const double R = 1.0 / ch.lambda;
  const double cb = (q - c).dot(u) / R;
  return R * R * (1 - cb);
}

}  // namespace

TEST_CASE("lens facets project onto hemispheres") {
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (double alpha : {0.3, 1.0, 1.5}) {
      const BallPolytope3 k = BallPolytope3::build(lambda, test::lens_centers(alpha, lambda));
      const InscribedBall b = inscribed_ball(k);
      for (int i : k.retained()) {
        CHECK(rel_err(projected_facet_area(k, b, i), 2 * kPi * b.radius * b.radius) < 1e-9);
      }
      const KeyClaimReport kc = key_claim_check(k);
      for (const FacetRatio& f : kc.facets) CHECK(rel_err(f.ratio, ratio_F(lambda, b.radius)) < 1e-9);
      CHECK(kc.passed);
      CHECK(rel_err(kc.surface_area, kc.lens_area) < 1e-9);
    }
  }
}

TEST_CASE("ratio of the lens facet") {
  CHECK(ratio_F(1.0, 0.5) == doctest::Approx(2.0));
  CHECK(ratio_F(2.0, 0.25) == doctest::Approx(2.0));
  CHECK(ratio_F(1.0, 1.0) == doctest::Approx(1.0));
  const LensParam p = lens3_from_inradius(1.0, 0.3);
  CHECK(rel_err(p.surface_area / (4 * kPi * 0.09), ratio_F(1.0, 0.3)) < 1e-12);
}

TEST_CASE("single ball projects onto the whole sphere") {
  const BallPolytope3 k = BallPolytope3::build(1.5, {Vec3(0.1, 0.2, 0.3)});
  const InscribedBall b = inscribed_ball(k);
  CHECK(rel_err(projected_facet_area(k, b, 0), 4 * kPi * b.radius * b.radius) < 1e-12);
}

TEST_CASE("projected facet areas match ray casting") {
  for (std::uint64_t seed : {3u, 17u, 40u}) {
    const BallPolytope3 k = random_polytope(GenSpec{seed, 7, 0.45, 1.0, 3, 0.0});
    const InscribedBall b = inscribed_ball(k);
    SplitMix64 rng(seed + 1000);
    const int n = 200000;
    std::vector<int> hits(k.centers().size(), 0);
    for (int s = 0; s < n; ++s) ++hits[exit_ball(k, b.center, test::random_unit(rng))];
    const double sphere = 4 * kPi * b.radius * b.radius;
    for (int i : k.retained()) {
      const double p = double(hits[i]) / n;
      const double sigma = std::sqrt(p * (1 - p) / n) * sphere;
      CHECK(std::abs(projected_facet_area(k, b, i) - p * sphere) < 4 * sigma + 1e-12);
    }
  }
}

TEST_CASE("projected areas tile the inscribed sphere") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SplitMix64 rng(seed);
    const int m = 2 + static_cast<int>(rng() % 11);
    const BallPolytope3 k = random_polytope(GenSpec{seed, m, rng.uniform(0.05, 0.95), 1.0, 3, 0.0});
    const Claim3Report r = claim3_check(k);
    CHECK(r.rel_deviation <= 1e-5);
    CHECK(r.passed);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("radial projection lands on the inscribed sphere") {
  const BallPolytope3 k = random_polytope(GenSpec{5, 6, 0.4, 1.0, 3, 0.0});
  const InscribedBall b = inscribed_ball(k);
  const RadialChart ch = make_chart(k, b, b.touching.front());
  CHECK(rel_err((ch.touch_point - b.center).norm(), b.radius) < 1e-12);
  SplitMix64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Vec3 q = b.center + rng.uniform(0.1, 2.0) * test::random_unit(rng);
    const Vec3 p = radial_project(ch, q);
    CHECK(std::abs((p - b.center).norm() - b.radius) < 1e-12);
    CHECK((p - b.center).normalized().dot((q - b.center).normalized()) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("chart density starts at 1 and increases") {
  for (double lambda : {0.5, 1.0, 3.0}) {
    for (double x : {0.1, 0.5, 0.9}) {
      RadialChart ch;
      ch.lambda = lambda;
      ch.r = x / lambda;
      CHECK(ch.ray_length(0) == doctest::Approx(ch.r).epsilon(1e-14));
      CHECK(ch.density(0) == doctest::Approx(1.0).epsilon(1e-14));
      double prev = ch.density(0);
      for (int i = 1; i <= 100; ++i) {
        const double g = ch.density(i * kPi / 200);
        CHECK(g > prev);
        prev = g;
      }
      // the ray meets the facet sphere
      const Vec3 c = -ch.offset() * ch.axis;
      for (double t : {0.2, 0.9, 1.5}) {
        const Vec3 q = ch.ray_length(t) * Vec3(std::sin(t), 0, std::cos(t));
        CHECK((q - c).norm() == doctest::Approx(1 / lambda).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("sector areas against the cap formula") {
  RadialChart ch;
  ch.lambda = 1.3;
  ch.r = 0.4;
  const Wedge w{0.3, 1.7};
  for (double x : {0.1, 0.4, 0.8, 1.0}) {
    const double t0 = x * kPi / 2;
    CHECK(rel_err(sector_area(ch, x, w), 1.4 * cap_area_per_radian(ch, t0)) < 1e-9);
    CHECK(rel_err(sector_projected_area(ch, x, w), 1.4 * ch.r * ch.r * (1 - std::cos(t0))) < 1e-12);
  }
}

TEST_CASE("full-height sectors have the lens ratio in every wedge") {
  for (double lambda : {0.7, 1.0, 2.0}) {
    RadialChart ch;
    ch.lambda = lambda;
    ch.r = 0.6 / lambda;
    for (const Wedge& w : {Wedge{0, kTwoPi}, Wedge{0, 0.1}, Wedge{1, 2.5}, Wedge{-3, 0.2}, Wedge{4, 6}}) {
      CHECK(std::abs(sector_ratio(ch, 1.0, w) - ratio_F(lambda, ch.r)) < 1e-8);
    }
  }
}

TEST_CASE("sector areas add over wedges") {
  RadialChart ch;
  ch.lambda = 1.0;
  ch.r = 0.35;
  for (double x : {0.2, 0.7}) {
    const double whole = sector_area(ch, x, Wedge{0.0, 3.0});
    const double parts = sector_area(ch, x, Wedge{0.0, 1.1}) + sector_area(ch, x, Wedge{1.1, 3.0});
    CHECK(rel_err(parts, whole) < 1e-12);
    CHECK(rel_err(sector_projected_area(ch, x, Wedge{0.0, 1.1}) + sector_projected_area(ch, x, Wedge{1.1, 3.0}),
                  sector_projected_area(ch, x, Wedge{0.0, 3.0})) < 1e-12);
  }
}

TEST_CASE("sector deficit is nonpositive and vanishes at full height") {
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (double xr : {0.1, 0.5, 0.95}) {
      RadialChart ch;
      ch.lambda = lambda;
      ch.r = xr / lambda;
      for (int i = 1; i < 20; ++i) CHECK(sector_deficit(ch, i / 20.0) <= 1e-12);
      CHECK(std::abs(sector_deficit(ch, 1.0)) < 1e-9 / (lambda * lambda));
      // sector ratios stay below the full-height ratio
      for (int i = 1; i < 20; ++i) CHECK(sector_ratio(ch, i / 20.0, Wedge{}) <= ratio_F(lambda, ch.r) + 1e-9);
    }
  }
}

TEST_CASE("facet ratios are bounded by the lens ratio") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(seed + 77);
    const int m = 2 + static_cast<int>(rng() % 11);
    const double lambda = rng.uniform(0.5, 2.0);
    const BallPolytope3 k = random_polytope(GenSpec{seed, m, rng.uniform(0.05, 0.95) / lambda, lambda, 3, 0.0});
    const KeyClaimReport r = key_claim_check(k);
    CHECK(r.passed);
    CHECK(r.max_ratio <= r.bound * (1 + 1e-9));
    CHECK(r.surface_area <= r.chain_bound * (1 + 1e-9));
    CHECK(rel_err(r.chain_bound, r.lens_area) < 1e-6);
    if (!k.is_lens()) CHECK(r.strict);
  }
}
