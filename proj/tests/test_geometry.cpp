#include <doctest.h>

#include "normvol/bodies.hpp"
#include "normvol/error.hpp"
#include "normvol/geometry.hpp"
#include "normvol/rng.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace normvol;

namespace {

Vector v2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

std::vector<Vector> gaussian_points(CounterRng& rng, int d, int n) {
  std::vector<Vector> pts;
  for (int i = 0; i < n; ++i) {
    Vector p(d);
    for (int j = 0; j < d; ++j) p[j] = rng.normal();
    pts.push_back(p);
  }
  return pts;
}

Matrix random_rotation(CounterRng& rng, int d) {
  Matrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = rng.normal();
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ() * Matrix::Identity(d, d);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("unit square hull and area") {
    const auto p = convex_hull(std::vector<Vector>{v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1), v2(0.5, 0.5)});
    CHECK(p.size() == 4);
    CHECK(p.volume() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.facets().rows.size() == 4);
  }

  TEST_CASE("hull drops collinear and duplicate points") {
    const auto p = convex_hull(std::vector<Vector>{v2(0, 0), v2(0.5, 0), v2(1, 0), v2(1, 1), v2(1, 1), v2(0, 1)});
    CHECK(p.size() == 4);
  }

  TEST_CASE("2D hull area matches gift wrapping on random sets") {
    CounterRng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const auto pts = gaussian_points(rng, 2, 3 + trial % 20);
      const auto p = convex_hull(pts);
      CHECK(p.volume() == doctest::Approx(oracle::hull_area(pts)).epsilon(1e-12));
      CHECK(p.size() == oracle::jarvis(pts).size());
      CHECK(shoelace_area(p.vertices()) > 0.0);  // counterclockwise
    }
  }

  TEST_CASE("3D hull volume matches brute-force facet enumeration") {
    CounterRng rng(12);
    for (int trial = 0; trial < 60; ++trial) {
      const auto pts = gaussian_points(rng, 3, 4 + trial % 12);
      CHECK(hull_volume(pts) == doctest::Approx(oracle::hull_volume3(pts)).epsilon(1e-10));
    }
  }

  TEST_CASE("volumes of standard bodies") {
    for (int d = 2; d <= 6; ++d) {
      CAPTURE(d);
      CHECK(cube(d).volume() == doctest::Approx(std::pow(2.0, d)).epsilon(1e-12));
      CHECK(cross_polytope(d).volume() == doctest::Approx(std::pow(2.0, d) / oracle::factorial(d)).epsilon(1e-12));
      CHECK(regular_simplex(d).volume() == doctest::Approx(oracle::regular_simplex_volume(d)).epsilon(1e-12));
      CHECK(cube(d).size() == static_cast<std::size_t>(1 << d));
      CHECK(cross_polytope(d).size() == static_cast<std::size_t>(2 * d));
    }
  }

  TEST_CASE("volume is invariant under rotation and scales by c^d") {
    CounterRng rng(13);
    for (int d = 2; d <= 5; ++d) {
      const auto pts = gaussian_points(rng, d, d + 6);
      const auto p = convex_hull(pts);
      const auto rotated = linear_image(p, random_rotation(rng, d));
      CHECK(rotated.volume() == doctest::Approx(p.volume()).epsilon(1e-10));
      const auto scaled = linear_image(p, 1.7 * Matrix::Identity(d, d));
      CHECK(scaled.volume() == doctest::Approx(std::pow(1.7, d) * p.volume()).epsilon(1e-10));
    }
  }

  TEST_CASE("interior points do not change the hull") {
    CounterRng rng(14);
    for (int d = 2; d <= 5; ++d) {
      auto pts = gaussian_points(rng, d, d + 5);
      const auto p = convex_hull(pts);
      for (int extra = 0; extra < 10; ++extra) {
        Vector mix = Vector::Zero(d);
        double total = 0.0;
        for (const auto& x : pts) {
          const double w = rng.uniform();
          mix += w * x;
          total += w;
        }
        pts.push_back(mix / total);
      }
      const auto q = convex_hull(pts);
      CHECK(q.size() == p.size());
      CHECK(q.volume() == doctest::Approx(p.volume()).epsilon(1e-12));
    }
  }

  TEST_CASE("hulling a vertex list reproduces it") {
    CounterRng rng(15);
    for (int d = 2; d <= 5; ++d) {
      const auto p = convex_hull(gaussian_points(rng, d, d + 8));
      const auto q = convex_hull(p.vertices());
      REQUIRE(q.size() == p.size());
      for (std::size_t i = 0; i < p.size(); ++i) CHECK(q.vertex(i) == p.vertex(i));
    }
  }

  TEST_CASE("polar of the cube is the cross-polytope and polar is an involution") {
    for (int d = 2; d <= 5; ++d) {
      const auto pc = polar(cube(d));
      CHECK(pc.size() == static_cast<std::size_t>(2 * d));
      CHECK(pc.volume() == doctest::Approx(cross_polytope(d).volume()).epsilon(1e-12));
      CHECK(vertex_set_distance(polar(pc), cube(d)) < 1e-12);
    }
  }

  TEST_CASE("hexagon polar area and Mahler products") {
    CHECK(polar(regular_ngon(6)).volume() == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-13));
    CHECK(cube(2).volume() * polar(cube(2)).volume() == doctest::Approx(8.0));
    CHECK(cube(3).volume() * polar(cube(3)).volume() == doctest::Approx(32.0 / 3.0));
  }

  TEST_CASE("Mahler volume is linear invariant") {
    CounterRng rng(16);
    const auto b = random_symmetric_polygon(rng).body;
    Matrix m(2, 2);
    m << 2.0, 0.3, -0.7, 0.9;
    const double before = b.volume() * polar(b).volume();
    const auto img = linear_image(b, m);
    CHECK(img.volume() * polar(img).volume() == doctest::Approx(before).epsilon(1e-12));
  }

  TEST_CASE("polar requires the origin in the interior") {
    const auto t = convex_hull(std::vector<Vector>{v2(0, 0), v2(1, 0), v2(0, 1)});
    CHECK(code_of([&] { polar(t); }) == ErrorCode::kPolarUndefined);
    CHECK(origin_depth(t) <= 0.0);
    CHECK(origin_depth(cube(2)) == doctest::Approx(1.0));
  }

  TEST_CASE("error cases") {
    CHECK(code_of([] { convex_hull(std::vector<Vector>{v2(0, 0), v2(1, 1), v2(2, 2)}); }) == ErrorCode::kFlatInput);
    CHECK(code_of([] { convex_hull(std::vector<Vector>{Vector::Zero(1), Vector::Ones(1)}); }) ==
          ErrorCode::kInvalidArgument);
    CHECK(code_of([] { convex_hull(std::vector<Vector>{Vector::Zero(7)}); }) == ErrorCode::kInvalidArgument);
    CHECK(code_of([] { convex_hull(std::vector<Vector>{v2(0, 0), v2(NAN, 1), v2(1, 0)}); }) ==
          ErrorCode::kInvalidArgument);
    Matrix sing(2, 2);
    sing << 1, 2, 2, 4;
    CHECK(code_of([&] { linear_image(cube(2), sing); }) == ErrorCode::kSingularMap);
    CHECK(code_of([] { support_point(cube(2), Vector::Zero(2)); }) == ErrorCode::kInvalidArgument);
    CHECK(hull_volume(std::vector<Vector>{v2(0, 0), v2(1, 1), v2(2, 2)}) == 0.0);
  }

  TEST_CASE("containment, support, width, diameter") {
    const auto sq = cube(2);
    CHECK(contains(sq, v2(0.5, -0.5), 0.0));
    CHECK(contains(sq, v2(1.0, 1.0), 1e-12));
    CHECK_FALSE(contains(sq, v2(1.01, 0.0), 1e-9));
    // A tie along the top edge resolves to the lexicographically largest vertex.
    CHECK(support_point(sq, v2(0, 1)) == v2(1, 1));
    CHECK(width(sq, v2(1, 1).normalized()) == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(diameter(sq) == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(width(regular_ngon(6), v2(0, 1)) == doctest::Approx(std::sqrt(3.0)));
  }

  TEST_CASE("translation and central symmetral") {
    const auto t = convex_hull(std::vector<Vector>{v2(-1, -1), v2(2, -1), v2(-1, 2)});
    const auto moved = translate(t, v2(3, 4));
    CHECK(moved.volume() == doctest::Approx(t.volume()));
    CHECK(moved.centroid().isApprox(t.centroid() + v2(3, 4)));
    const auto sym = central_symmetral(t);
    CHECK(sym.symmetric());
    CHECK_FALSE(t.symmetric());
    CHECK(sym.volume() == doctest::Approx(2.0 * t.volume()));  // o is the centroid of t
  }

  TEST_CASE("symmetry detection") {
    CHECK(cube(3).symmetric());
    CHECK(cross_polytope(4).symmetric());
    CHECK(regular_ngon(6).symmetric());
    CHECK_FALSE(regular_ngon(5).symmetric());
    CHECK_FALSE(regular_simplex(3).symmetric());
  }

  TEST_CASE("content hash is stable and sees -0 as 0") {
    const auto a = convex_hull(std::vector<Vector>{v2(0.0, -1), v2(1, 0), v2(-0.0, 1), v2(-1, 0)});
    const auto b = convex_hull(std::vector<Vector>{v2(-0.0, -1), v2(1, 0), v2(0.0, 1), v2(-1, 0)});
    CHECK(content_hash(a) == content_hash(b));
    CHECK(content_hash(a) != content_hash(cube(2)));
    CHECK(content_hash(a).size() == 16);
  }
}
