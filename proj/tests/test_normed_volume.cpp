#include <doctest.h>

#include "normvol/bodies.hpp"
#include "normvol/error.hpp"
#include "normvol/normed_volume.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace normvol;

namespace {

constexpr VolumeKind kAllKinds[] = {VolumeKind::kBusemann, VolumeKind::kHolmesThompson, VolumeKind::kMass,
                                    VolumeKind::kMassStar};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

}  // namespace

TEST_SUITE("normed_volume") {
  TEST_CASE("unit ball volumes") {
    for (int d = 1; d <= 10; ++d) CHECK(unit_ball_volume(d) == doctest::Approx(oracle::ball_volume(d)).epsilon(1e-14));
    CHECK(unit_ball_volume(2) == doctest::Approx(std::numbers::pi));
  }

  TEST_CASE("kind tags round-trip") {
    for (auto k : kAllKinds) CHECK(parse_volume_kind(to_string(k)) == k);
    CHECK_FALSE(parse_volume_kind("lebesgue").has_value());
  }

  TEST_CASE("each normalization of the unit ball itself") {
    const SolverBudget b;
    for (int d = 2; d <= 4; ++d) {
      CAPTURE(d);
      const auto body = d == 2 ? regular_ngon(6) : cross_polytope(d);
      CHECK(normed_volume(body, body, VolumeKind::kBusemann, b) == doctest::Approx(unit_ball_volume(d)).epsilon(1e-13));
      const auto cross = max_cross_polytope(body, b).object;
      CHECK(normed_volume(body, cross, VolumeKind::kMass, b) ==
            doctest::Approx(std::pow(2.0, d) / oracle::factorial(d)).epsilon(1e-13));
      CHECK(normed_volume(body, polar(polar(body)), VolumeKind::kHolmesThompson, b) ==
            doctest::Approx(body.volume() * polar(body).volume() / unit_ball_volume(d)).epsilon(1e-12));
    }
    const auto sq = cube(2);
    CHECK(normed_volume(sq, sq, VolumeKind::kMassStar, b) == doctest::Approx(4.0));
  }

  TEST_CASE("regular hexagon values") {
    const SolverBudget b;
    const auto hex = regular_ngon(6);
    CHECK(normed_volume(hex, hex, VolumeKind::kMass, b) == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(mu(hex, 3, VolumeKind::kBusemann, b).value == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-13));
    CHECK(mu(hex, 4, VolumeKind::kHolmesThompson, b).value == doctest::Approx(6.0 / std::numbers::pi).epsilon(1e-13));
    CHECK(mu(hex, 4, VolumeKind::kMass, b).value == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(mu(hex, 6, VolumeKind::kMass, b).value == doctest::Approx(3.0).epsilon(1e-13));
  }

  TEST_CASE("cross-polytope and cube under mass and mass*") {
    const SolverBudget b;
    const auto c3 = cross_polytope(3);
    CHECK(mu(c3, 6, VolumeKind::kMass, b).value == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    CHECK(mu(c3, 5, VolumeKind::kMass, b).value == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(mu(c3, 4, VolumeKind::kMass, b).value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(mu(cube(3), 8, VolumeKind::kMassStar, b).value == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(mu(cube(2), 3, VolumeKind::kMassStar, b).value == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(mu(cube(2), 3, VolumeKind::kMass, b).value == doctest::Approx(1.0).epsilon(1e-13));
  }

  TEST_CASE("every normalization is linear invariant") {
    CounterRng rng(41);
    const SolverBudget b;
    for (int i = 0; i < 10; ++i) {
      const auto body = random_symmetric_polygon(rng).body;
      Matrix m(2, 2);
      m << rng.uniform(0.5, 2.0), rng.normal() * 0.5, rng.normal() * 0.5, rng.uniform(0.5, 2.0);
      const auto img = linear_image(body, m);
      for (auto k : kAllKinds) {
        CAPTURE(to_string(k));
        CHECK(mu(img, 4, k, b).value == doctest::Approx(mu(body, 4, k, b).value).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("the whole body bounds mu_n from above") {
    CounterRng rng(42);
    const SolverBudget b;
    for (int i = 0; i < 20; ++i) {
      const auto body = random_symmetric_polygon(rng).body;
      CHECK(normed_volume(body, body, VolumeKind::kBusemann, b) == doctest::Approx(std::numbers::pi));
      // lambda(B) <= lambda(C(B)), so the mass* measure of B is at most 4.
      CHECK(normed_volume(body, body, VolumeKind::kMassStar, b) <= 4.0 + 1e-12);
      double prev = 0.0;
      for (int n = 3; n <= static_cast<int>(body.size()); ++n) {
        const double v = mu(body, n, VolumeKind::kBusemann, b).value;
        CHECK(v >= prev);
        CHECK(v <= std::numbers::pi * (1.0 + 1e-12));
        prev = v;
      }
    }
  }

  TEST_CASE("mu equals normalizer times the witness volume") {
    CounterRng rng(43);
    const SolverBudget b;
    NormalizerCache cache;
    const auto body = random_symmetric_polygon(rng).body;
    for (auto k : kAllKinds) {
      const auto r = mu(body, 5, k, b, &cache);
      CHECK(r.kind == k);
      CHECK(r.n == 5);
      CHECK(r.value == doctest::Approx(r.normalizer * r.witness.value).epsilon(1e-15));
      CHECK(r.witness.value == doctest::Approx(r.witness.object.volume()).epsilon(1e-12));
      CHECK(r.value == mu(body, 5, k, b).value);
    }
  }

  TEST_CASE("cached and uncached normalizers agree") {
    const SolverBudget b;
    NormalizerCache cache;
    const auto body = simplex_symmetral(3);
    const auto first = volume_normalizer(body, VolumeKind::kMass, b, &cache);
    const auto again = volume_normalizer(body, VolumeKind::kMass, b, &cache);
    CHECK(first.factor == again.factor);
    CHECK(first.factor == volume_normalizer(body, VolumeKind::kMass, b).factor);
    CHECK_FALSE(volume_normalizer(cube(3), VolumeKind::kMassStar, b).exact);
    CHECK(volume_normalizer(cube(2), VolumeKind::kMassStar, b).exact);
  }

  TEST_CASE("errors") {
    const SolverBudget b;
    CHECK(code_of([&] { mu(regular_simplex(2), 3, VolumeKind::kBusemann, b); }) == ErrorCode::kNotSymmetric);
    CHECK(code_of([&] { mu(cube(3), 3, VolumeKind::kBusemann, b); }) == ErrorCode::kInvalidArgument);
    CHECK(code_of([&] { normed_volume(cube(2), cube(3), VolumeKind::kMass, b); }) == ErrorCode::kInvalidArgument);
  }
}
