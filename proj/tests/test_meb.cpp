#include <doctest.h>

#include <algorithm>

#include "lch/meb.hpp"
#include "support.hpp"

using namespace lch;

TEST_CASE("enclosing ball of small sets") {
  const auto two = minimal_enclosing_ball(std::vector<Vec3>{Vec3(0.5, 0, 0), Vec3(-0.5, 0, 0)});
  CHECK(two.center.norm() < 1e-15);
  CHECK(two.radius == doctest::Approx(0.5).epsilon(1e-15));
  const auto one = minimal_enclosing_ball(std::vector<Vec3>{Vec3(1, 2, 3)});
  CHECK(one.radius == 0.0);
  CHECK((one.center - Vec3(1, 2, 3)).norm() == 0.0);
}

TEST_CASE("enclosing ball of random points is certified") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<Vec3> pts = test::random_centers(rng, 1000, 0.5);
    const auto meb = minimal_enclosing_ball(pts);
    for (const Vec3& p : pts) CHECK((p - meb.center).norm() <= meb.radius + 1e-10);
    REQUIRE(!meb.support.empty());
    CHECK(meb.support.size() <= 4);
    // shrinking by 1e-6 leaves a support point outside, for any small move of the center
    bool some_out = false;
    for (int s : meb.support) some_out = some_out || (pts[s] - meb.center).norm() > meb.radius - 1e-6;
    CHECK(some_out);
    std::vector<Vec3> sup;
    for (int s : meb.support) sup.push_back(pts[s]);
    CHECK(halfspace_condition(sup, meb.center));
    // brute-force oracle: no single-point move improves the radius
    for (int k = 0; k < 50; ++k) {
      const Vec3 c = meb.center + 1e-4 * test::random_unit(rng);
      double far = 0;
      for (const Vec3& p : pts) far = std::max(far, (p - c).norm());
      CHECK(far >= meb.radius - 1e-12);
    }
  }
}

TEST_CASE("2-D enclosing disk") {
  SplitMix64 rng(8);
  std::vector<Vec2> pts;
  for (int i = 0; i < 500; ++i) pts.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
  const auto meb = minimal_enclosing_ball(pts);
  for (const Vec2& p : pts) CHECK((p - meb.center).norm() <= meb.radius + 1e-10);
  CHECK(meb.support.size() >= 2);
  CHECK(meb.support.size() <= 3);
}

TEST_CASE("half-space condition") {
  CHECK(halfspace_condition(std::vector<Vec3>{Vec3(1, 0, 0), Vec3(-1, 0, 0)}, Vec3::Zero()));
  CHECK_FALSE(halfspace_condition(std::vector<Vec3>{Vec3(1, 0, 0.1), Vec3(0, 1, 0.1), Vec3(-0.3, -0.3, 0.1)}, Vec3::Zero()));
  const double s = 1.0 / std::sqrt(3.0);
  CHECK(halfspace_condition(
      std::vector<Vec3>{Vec3(s, s, s), Vec3(s, -s, -s), Vec3(-s, s, -s), Vec3(-s, -s, s)}, Vec3::Zero()));
  CHECK(halfspace_condition(std::vector<Vec2>{Vec2(1, 0), Vec2(-0.5, 0.8), Vec2(-0.5, -0.8)}, Vec2::Zero()));
  CHECK_FALSE(halfspace_condition(std::vector<Vec2>{Vec2(1, 0.1), Vec2(-1, 0.1)}, Vec2::Zero()));
}
