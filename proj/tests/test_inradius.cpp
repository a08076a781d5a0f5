#include <doctest.h>

#include <algorithm>

#include "lch/harness.hpp"
#include "lch/inradius.hpp"
#include "support.hpp"

using namespace lch;

TEST_CASE("inscribed ball of the lens and the ball") {
  const InscribedBall l = inscribed_ball(BallPolytope3::build(1.0, {Vec3(0, 0, -0.5), Vec3(0, 0, 0.5)}));
  CHECK(l.center.norm() < 1e-15);
  CHECK(l.radius == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(l.touching == std::vector<int>{0, 1});
  const InscribedBall b = inscribed_ball(BallPolytope3::build(1.0, {Vec3(1, 2, 3)}));
  CHECK(b.radius == 1.0);
  CHECK(b.touching == std::vector<int>{0});
}

TEST_CASE("generator inradius is recovered exactly") {
  SweepConfig cfg;
  cfg.seed = 77;
  for (std::size_t i = 0; i < 200; ++i) {
    const GenSpec s = sweep_spec(cfg, i);
    const InscribedBall b = inscribed_ball(random_polytope(s));
    CHECK(std::abs(b.radius - s.inradius) < 1e-10);
    CHECK(static_cast<int>(b.touching.size()) == s.m);
  }
}

TEST_CASE("inradius equals the max-min depth (grid oracle refined by descent)") {
  SplitMix64 rng(12);
  for (int t = 0; t < 4; ++t) {
    const auto c = test::random_centers(rng, 5, 0.4);
    const BallPolytope3 k = BallPolytope3::build(1.0, c);
    const InscribedBall b = inscribed_ball(k);
    auto depth = [&](const Vec3& x) {
      double d = 1e300;
      for (const Vec3& o : c) d = std::min(d, 1.0 - (x - o).norm());
      return d;
    };
    // coarse grid around the centroid, then compass search
    Vec3 best = Vec3::Zero();
    for (const Vec3& o : c) best += o / static_cast<double>(c.size());
    double step = 1e-2;
    const Vec3 c0 = best;
    for (int i = -30; i <= 30; ++i)
      for (int j = -30; j <= 30; ++j)
        for (int l = -30; l <= 30; ++l) {
          const Vec3 x = c0 + step * Vec3(i, j, l);
          if (depth(x) > depth(best)) best = x;
        }
    CHECK(std::abs(depth(best) - b.radius) < 1e-2);
    // exact oracle: the smallest circumsphere of 1..4 centers that contains all of them
    double meb = 1e300;
    const int n = static_cast<int>(c.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<Vec3> s;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(c[i]);
      if (s.size() > 4) continue;
      const int q = static_cast<int>(s.size()) - 1;
      Eigen::MatrixXd a(q, q);
      Eigen::VectorXd rhs(q);
      for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) a(i, j) = 2 * (s[i + 1] - s[0]).dot(s[j + 1] - s[0]);
        rhs(i) = (s[i + 1] - s[0]).squaredNorm();
      }
      Vec3 x = s[0];
      if (q > 0) {
        const Eigen::VectorXd coef = a.fullPivLu().solve(rhs);
        for (int i = 0; i < q; ++i) x += coef(i) * (s[i + 1] - s[0]);
      }
      const double rad = (x - s[0]).norm();
      bool ok = true;
      for (const Vec3& o : c) ok = ok && (o - x).norm() <= rad + 1e-12;
      if (ok && rad < meb) {
        meb = rad;
        best = x;
      }
    }
    CHECK(std::abs(depth(best) - b.radius) < 1e-8);
    CHECK(depth(best) <= b.radius + 1e-12);
  }
}

TEST_CASE("touching set equals the enclosing-ball support") {
  SplitMix64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const BallPolytope3 k = BallPolytope3::build(1.0, test::random_centers(rng, 6, 0.4));
    std::vector<int> sup = k.center_meb().support;
    std::sort(sup.begin(), sup.end());
    CHECK(inscribed_ball(k).touching == sup);
  }
}

TEST_CASE("reduce to touching") {
  const BallPolytope3 lens = BallPolytope3::build(1.0, {Vec3(0, 0, -0.5), Vec3(0, 0, 0.5)});
  CHECK(reduce_to_touching(lens).centers().size() == 2);
  // a third ball cutting the lens's side without reaching the inscribed ball
  const BallPolytope3 k = BallPolytope3::build(1.0, {Vec3(0, 0, -0.5), Vec3(0, 0, 0.5), Vec3(-0.3, 0, 0)});
  REQUIRE(k.retained().size() == 3);
  const BallPolytope3 r = reduce_to_touching(k);
  CHECK(r.centers().size() == 2);
  CHECK(inscribed_ball(r).radius == doctest::Approx(inscribed_ball(k).radius).epsilon(1e-14));
  CHECK(r.surface_area() > k.surface_area());
  // idempotent
  CHECK(reduce_to_touching(r).centers() == r.centers());
  const BallPolytope3 g = random_polytope(GenSpec{4, 7, 0.3, 1.0, 3, 0.0});
  CHECK(reduce_to_touching(g).centers() == g.centers());
}

TEST_CASE("shrink touching") {
  const BallPolytope3 lens = BallPolytope3::build(1.0, {Vec3(0, 0, -0.5), Vec3(0, 0, 0.5)});
  CHECK(shrink_touching(lens, 0.5).centers() == lens.centers());
  const BallPolytope3 s = shrink_touching(lens, 0.25);
  CHECK(inscribed_ball(s).radius == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(s.surface_area() == doctest::Approx(4 * kPi * 0.25).epsilon(1e-12));  // 1 - cos(alpha) = 0.25
  CHECK_THROWS_AS(shrink_touching(lens, 0.6), InvalidParameter);
  CHECK_THROWS_AS(shrink_touching(lens, 0.0), InvalidParameter);
  CHECK_THROWS_AS(shrink_touching(BallPolytope3::build(1.0, {Vec3::Zero()}), 0.5), InvalidParameter);

  const BallPolytope3 g = random_polytope(GenSpec{8, 6, 0.6, 1.0, 3, 0.0});
  double prev = 0.0;
  for (double sr = 0.05; sr <= 0.6 + 1e-12; sr += 0.05) {
    const BallPolytope3 h = shrink_touching(g, std::min(sr, 0.6));
    CHECK(inscribed_ball(h).radius == doctest::Approx(std::min(sr, 0.6)).epsilon(1e-10));
    CHECK(h.surface_area() > prev);
    prev = h.surface_area();
  }
}

TEST_CASE("reverse inradius inequality") {
  const ReverseInradiusReport l = verify_reverse_inradius(BallPolytope3::build(1.0, test::lens_centers(1.1)));
  CHECK(std::abs(l.margin) < 1e-10);
  CHECK(l.passed);
  const ReverseInradiusReport b = verify_reverse_inradius(BallPolytope3::build(1.0, {Vec3::Zero()}));
  CHECK(std::abs(b.margin) < 1e-10);
  SweepConfig cfg;
  cfg.seed = 3;
  for (std::size_t i = 0; i < 300; ++i) {
    const BallPolytope3 k = random_polytope(sweep_spec(cfg, i));
    const ReverseInradiusReport r = verify_reverse_inradius(k);
    CHECK(r.passed);
    if (!k.vertices().empty()) CHECK(r.margin > 0.0);
  }
}
