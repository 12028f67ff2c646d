#include <doctest.h>

#include "normvol/bodies.hpp"
#include "normvol/error.hpp"
#include "normvol/harness.hpp"
#include "normvol/shadow.hpp"
#include "oracles.hpp"

#include <cmath>
#include <string>

using namespace normvol;

namespace {

Vector v2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

ShadowSystem square_system(std::vector<double> speeds) {
  ShadowSystem s;
  s.base = {v2(-1, -1), v2(1, -1), v2(1, 1), v2(-1, 1)};
  s.speeds = std::move(speeds);
  s.direction = v2(1, 0);
  return s;
}

}  // namespace

TEST_SUITE("shadow") {
  TEST_CASE("zero speeds give a constant body") {
    const auto r = volume_profile(square_system({0, 0, 0, 0}), -2, 2, 11);
    REQUIRE(r.values.size() == 11);
    for (double v : r.values) CHECK(v == doctest::Approx(4.0));
    CHECK(r.pass);
    CHECK(r.grid.front() == -2.0);
    CHECK(r.grid.back() == 2.0);
  }

  TEST_CASE("moving one vertex of the square") {
    const auto s = square_system({0, 0, 1, 0});
    CHECK(evaluate(s, 0.0).volume() == doctest::Approx(4.0));
    for (double t : {-1.5, -0.5, 0.25, 1.0, 3.0}) {
      CAPTURE(t);
      std::vector<Vector> pts;
      for (std::size_t i = 0; i < 4; ++i) pts.push_back(s.base[i] + t * s.speeds[i] * s.direction);
      CHECK(evaluate(s, t).volume() == doctest::Approx(oracle::hull_area(pts)).epsilon(1e-13));
    }
    CHECK(volume_profile(s, -3, 3, 61).pass);
  }

  TEST_CASE("flat sections are reported with their parameter") {
    // Squashing the right edge onto the left edge at t = 2.
    const auto s = square_system({0, -1, -1, 0});
    try {
      evaluate(s, 2.0);
      FAIL("expected kZeroVolume");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kZeroVolume);
      CHECK(std::string(e.what()).find('2') != std::string::npos);
    }
    CHECK_THROWS_AS(volume_profile(s, 0, 4, 5), Error);
  }

  TEST_CASE("argument validation") {
    CHECK_THROWS_AS(volume_profile(square_system({0, 0, 0, 0}), 0, 1, 2), Error);
    CHECK_THROWS_AS(volume_profile(square_system({0, 0, 0}), 0, 1, 5), Error);
    auto s = square_system({0, 0, 0, 0});
    s.direction = v2(0, 0);
    CHECK_THROWS_AS(s.validate(), Error);
  }

  TEST_CASE("random shadow systems have convex volume profiles") {
    CounterRng rng(51);
    for (int i = 0; i < 30; ++i) {
      const int d = 2 + i % 2;
      const auto s = random_shadow_system(rng, d, 4 + d);
      const auto r = volume_profile(s, -1, 1, 101, 1e-8);
      CHECK(r.pass);
      CHECK(r.min_second_difference >= -1e-8 * *std::max_element(r.values.begin(), r.values.end()));
    }
  }

  TEST_CASE("convexity check flags a concave series") {
    const auto r = check_convexity({0, 1, 2, 3, 4}, {1, 2, 2.5, 2, 1}, 1e-8);
    CHECK_FALSE(r.pass);
    CHECK(r.min_second_difference == doctest::Approx(-1.0));
    CHECK(check_convexity({0, 1, 2}, {3, 1, 3}, 0.0).pass);
  }

  TEST_CASE("reciprocal polar profile is constant for translations") {
    // A pure translation keeps the Santalo-centred polar fixed.
    ShadowSystem s;
    CounterRng rng(52);
    const auto body = random_symmetric_polygon(rng).body;
    s.base = body.vertices();
    s.speeds.assign(s.base.size(), 1.0);
    s.direction = v2(0.6, 0.8);
    const auto r = mr_profile(s, -1, 1, 9);
    CHECK(r.pass);
    for (double v : r.values) CHECK(v == doctest::Approx(r.values.front()).epsilon(1e-7));
    CHECK(r.values.front() == doctest::Approx(1.0 / polar(body).volume()).epsilon(1e-7));
  }

  TEST_CASE("reciprocal polar profile is convex on random systems") {
    CounterRng rng(53);
    for (int i = 0; i < 5; ++i) CHECK(mr_profile(random_shadow_system(rng, 2, 6), -0.5, 0.5, 21).pass);
  }

  TEST_CASE("cascade on the coordinate axes") {
    const auto r = projection_cascade({v2(1, 0), v2(0, 1)}, {v2(3, 4)}, 1e-9, 100);
    CHECK(r.status == CascadeStatus::kReached);
    REQUIRE(r.trace.size() == 3);
    CHECK(r.trace[0] == doctest::Approx(5.0));
    CHECK(r.trace[1] == doctest::Approx(3.0));  // projecting out y removes the larger share
    CHECK(r.trace[2] == 0.0);
    CHECK(r.chosen == std::vector<int>{1, 0});
  }

  TEST_CASE("cascade edge cases") {
    const auto zero = projection_cascade({v2(1, 0), v2(0, 1)}, {v2(0, 0)}, 1e-9, 10);
    CHECK(zero.status == CascadeStatus::kReached);
    CHECK(zero.trace.size() == 1);
    CHECK_THROWS_AS(projection_cascade({v2(1, 0), v2(2, 0)}, {v2(1, 1)}, 1e-9, 10), Error);
    try {
      projection_cascade({v2(1, 0), v2(-3, 0)}, {v2(1, 1)}, 1e-9, 10);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidFamily);
    }
  }

  TEST_CASE("cascade traces decrease monotonically") {
    CounterRng rng(54);
    for (int i = 0; i < 20; ++i) {
      const int d = 2 + i % 2;
      std::vector<Vector> normals, points;
      for (int k = 0; k < d + 1; ++k) {
        Vector n(d);
        for (int j = 0; j < d; ++j) n[j] = rng.normal();
        normals.push_back(n.normalized());
      }
      for (int k = 0; k < 5; ++k) {
        Vector p(d);
        for (int j = 0; j < d; ++j) p[j] = rng.normal();
        points.push_back(p);
      }
      const auto r = projection_cascade(normals, points, 0.0, 200);
      for (std::size_t k = 1; k < r.trace.size(); ++k) CHECK(r.trace[k] <= r.trace[k - 1]);
      CHECK(r.chosen.size() + 1 == r.trace.size());
    }
  }
}
