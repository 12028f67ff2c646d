#include "normvol/bodies.hpp"

#include "normvol/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace normvol {
namespace {

void check_dim(int d, int lo, const char* who) {
  if (d < lo || d > kMaxDim)
    fail(ErrorCode::kInvalidArgument, std::string(who) + ": dimension out of range");
}

// Vertices of the regular d-simplex (circumradius 1, centroid o) via the
// Helmert basis of the hyperplane sum(x) = 0 in R^{d+1}.
std::vector<Vector> simplex_vertices(int d) {
  const double scale = std::sqrt(static_cast<double>(d) / (d + 1));
  std::vector<Vector> verts;
  for (int i = 0; i <= d; ++i) {
    Vector x(d);
    for (int j = 1; j <= d; ++j) {
      const double norm = std::sqrt(static_cast<double>(j) * (j + 1));
      double e = 0.0;
      if (i < j) e = 1.0;
      else if (i == j) e = -static_cast<double>(j);
      x[j - 1] = e / norm;
    }
    verts.push_back(x / scale);
  }
  return verts;
}

}  // namespace

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
  return r;
}

Polytope regular_simplex(int d) {
  check_dim(d, 2, "regular_simplex");
  return convex_hull(simplex_vertices(d));
}

Polytope cross_polytope(int d) {
  check_dim(d, 2, "cross_polytope");
  std::vector<Vector> v;
  for (int i = 0; i < d; ++i) {
    v.push_back(Vector::Unit(d, i));
    v.push_back(-Vector::Unit(d, i));
  }
  return convex_hull(v);
}

Polytope cube(int d) {
  check_dim(d, 2, "cube");
  std::vector<Vector> v;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vector x(d);
    for (int i = 0; i < d; ++i) x[i] = (mask >> i) & 1 ? -1.0 : 1.0;
    v.push_back(x);
  }
  return convex_hull(v);
}

Polytope regular_ngon(int n, double circumradius) {
  if (n < 3) fail(ErrorCode::kInvalidArgument, "regular_ngon: need n >= 3");
  if (!(circumradius > 0.0)) fail(ErrorCode::kInvalidArgument, "regular_ngon: radius must be positive");
  std::vector<Vector> v;
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * i / n;
    Vector x(2);
    x << circumradius * std::cos(a), circumradius * std::sin(a);
    v.push_back(x);
  }
  return convex_hull(v);
}

Polytope simplex_symmetral(int d) {
  check_dim(d, 2, "simplex_symmetral");
  return central_symmetral(regular_simplex(d));
}

Polytope simplex_pair_body(int d, int k) {
  check_dim(d, 2, "simplex_pair_body");
  if (k < 1 || k > d - 1) fail(ErrorCode::kInvalidArgument, "simplex_pair_body: need 1 <= k <= d-1");
  std::vector<Vector> pts;
  auto embed = [&](const std::vector<Vector>& s, int offset) {
    for (const auto& v : s) {
      Vector x = Vector::Zero(d);
      x.segment(offset, v.size()) = v;
      pts.push_back(x);
      pts.push_back(-x);
    }
  };
  embed(simplex_vertices(k), 0);
  embed(simplex_vertices(d - k), k);
  return convex_hull(pts);
}

AffineRegularity is_affinely_regular(const Polytope& polygon, double tol) {
  if (polygon.dim() != 2) fail(ErrorCode::kInvalidArgument, "is_affinely_regular: polygon expected");
  const auto& p = polygon.vertices();
  const auto n = static_cast<long>(p.size());
  AffineRegularity out;
  if (n < 4) {
    out.regular = true;
    return out;
  }
  auto at = [&](long j) -> const Vector& { return p[static_cast<std::size_t>(((j % n) + n) % n)]; };
  double num = 0.0;
  double den = 0.0;
  for (long j = 0; j < n; ++j) {
    const Vector a = at(j + 2) - at(j - 1);
    const Vector b = at(j + 1) - at(j);
    num += a.dot(b);
    den += b.dot(b);
  }
  out.tau = num / den;
  for (long j = 0; j < n; ++j) {
    const Vector r = at(j + 2) - at(j - 1) - out.tau * (at(j + 1) - at(j));
    out.max_residual = std::max(out.max_residual, r.norm());
  }
  out.regular = out.tau >= 0.0 && out.max_residual <= tol * diameter(polygon);
  return out;
}

Polytope radon_hexagon() { return regular_ngon(6, std::sqrt(2.0 / std::sqrt(3.0))); }

RadonCertificate radon_certificate(const Polytope& polygon, double tol) {
  if (polygon.dim() != 2) fail(ErrorCode::kInvalidArgument, "radon_certificate: polygon expected");
  if (!polygon.symmetric()) fail(ErrorCode::kNotSymmetric, "radon_certificate: body is not o-symmetric");
  if (origin_depth(polygon) <= 0.0) fail(ErrorCode::kPolarUndefined, "radon_certificate: origin not interior");

  const auto& v = polygon.vertices();
  double best = 0.0;
  std::size_t bi = 0;
  std::size_t bj = 0;
  const double tie = 1e-12 * polygon.scale() * polygon.scale();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const double a = std::abs(v[i][0] * v[j][1] - v[i][1] * v[j][0]);
      if (a > best + tie) {
        best = a;
        bi = i;
        bj = j;
      }
    }
  }
  if (best <= 1e-12 * polygon.scale() * polygon.scale())
    fail(ErrorCode::kCertificateFailed, "radon_certificate: degenerate inscribed parallelogram");

  Matrix frame(2, 2);
  frame.col(0) = v[bi];
  frame.col(1) = v[bj];
  RadonCertificate cert;
  cert.normalizing_map = frame.inverse();
  const Polytope normalized = linear_image(polygon, cert.normalizing_map);
  Matrix quarter(2, 2);
  quarter << 0.0, -1.0, 1.0, 0.0;
  const Polytope rotated = linear_image(normalized, quarter);
  cert.max_deviation = vertex_set_distance(rotated, polar(normalized));
  cert.accepted = cert.max_deviation <= tol;
  return cert;
}

RandomPolygon random_symmetric_polygon(CounterRng& rng, int k_min, int k_max) {
  if (k_min < 2 || k_max < k_min) fail(ErrorCode::kInvalidArgument, "random_symmetric_polygon: bad k range");
  RandomPolygon out{cube(2), 0};
  out.k_dirs = static_cast<int>(rng.uniform_int(k_min, k_max));
  std::vector<Vector> pts;
  for (int i = 0; i < out.k_dirs; ++i) {
    const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double r = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
    Vector x(2);
    x << r * std::cos(a), r * std::sin(a);
    pts.push_back(x);
    pts.push_back(-x);
  }
  const Polytope raw = convex_hull(pts);
  const double s = std::sqrt(std::numbers::pi / raw.volume());
  out.body = linear_image(raw, s * Matrix::Identity(2, 2));
  return out;
}

}  // namespace normvol
