#include "normvol/geometry.hpp"

#include "hull.hpp"
#include "normvol/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>

namespace normvol {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kFlatInput: return "flat input";
    case ErrorCode::kZeroVolume: return "zero volume";
    case ErrorCode::kPolarUndefined: return "polar undefined";
    case ErrorCode::kSingularMap: return "singular map";
    case ErrorCode::kNotSymmetric: return "body not symmetric";
    case ErrorCode::kSolverStall: return "solver stall";
    case ErrorCode::kCertificateFailed: return "certificate failed";
    case ErrorCode::kInvalidFamily: return "invalid hyperplane family";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kUnsupported: return "unsupported";
  }
  return "unknown";
}

Vector Polytope::centroid() const {
  Vector c = Vector::Zero(dim_);
  for (const auto& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

Polytope convex_hull(std::span<const Vector> points) {
  if (points.empty()) fail(ErrorCode::kFlatInput, "convex_hull: no points");
  const auto d = points.front().size();
  if (d < kMinDim || d > kMaxDim)
    fail(ErrorCode::kInvalidArgument, "convex_hull: dimension must be in 2..6");
  for (const auto& p : points) {
    if (p.size() != static_cast<Eigen::Index>(d))
      fail(ErrorCode::kInvalidArgument, "convex_hull: mixed point dimensions");
    if (!p.allFinite()) fail(ErrorCode::kInvalidArgument, "convex_hull: non-finite coordinate");
  }
  auto data = detail::compute_hull(points, true);
  if (!data) fail(ErrorCode::kFlatInput, "convex_hull: affine hull is not full-dimensional");

  Polytope out;
  out.dim_ = static_cast<int>(d);
  out.vertices_.reserve(data->extreme.size());
  for (auto i : data->extreme) out.vertices_.push_back(points[i]);
  out.facets_.rows = std::move(data->facets);
  out.volume_ = data->volume;

  const Vector c = out.centroid();
  out.scale_ = 0.0;
  for (const auto& v : out.vertices_) out.scale_ = std::max(out.scale_, (v - c).norm());

  const double tol = kDedupTol * out.scale_;
  out.symmetric_ = std::all_of(out.vertices_.begin(), out.vertices_.end(), [&](const Vector& v) {
    return std::any_of(out.vertices_.begin(), out.vertices_.end(), [&](const Vector& w) {
      return (v + w).lpNorm<Eigen::Infinity>() <= tol;
    });
  });
  return out;
}

double hull_volume(std::span<const Vector> points) {
  if (points.empty()) return 0.0;
  auto data = detail::compute_hull(points, false);
  return data ? data->volume : 0.0;
}

double volume(const Polytope& p) { return p.volume(); }

double shoelace_area(std::span<const Vector> ring) {
  double a = 0.0;
  const auto n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = ring[i];
    const auto& q = ring[(i + 1) % n];
    a += p[0] * q[1] - p[1] * q[0];
  }
  return 0.5 * a;
}

double origin_depth(const Polytope& p) {
  double depth = std::numeric_limits<double>::infinity();
  for (const auto& h : p.facets().rows) depth = std::min(depth, h.offset);
  return depth;
}

Polytope polar(const Polytope& p) {
  if (origin_depth(p) <= 1e-9 * p.scale())
    fail(ErrorCode::kPolarUndefined, "polar: origin is not an interior point");
  std::vector<Vector> dual;
  dual.reserve(p.facets().rows.size());
  for (const auto& h : p.facets().rows) dual.push_back(h.normal / h.offset);
  return convex_hull(dual);
}

Polytope linear_image(const Polytope& p, const Matrix& m) {
  if (m.rows() != p.dim() || m.cols() != p.dim())
    fail(ErrorCode::kInvalidArgument, "linear_image: matrix shape does not match dimension");
  if (std::abs(m.determinant()) <= 1e-12) fail(ErrorCode::kSingularMap, "linear_image: singular matrix");
  std::vector<Vector> image;
  image.reserve(p.size());
  for (const auto& v : p.vertices()) image.push_back(m * v);
  return convex_hull(image);
}

Polytope translate(const Polytope& p, const Vector& shift) {
  std::vector<Vector> moved;
  moved.reserve(p.size());
  for (const auto& v : p.vertices()) moved.push_back(v + shift);
  return convex_hull(moved);
}

Polytope central_symmetral(const Polytope& p) {
  std::vector<Vector> pts = p.vertices();
  pts.reserve(2 * p.size());
  for (const auto& v : p.vertices()) pts.push_back(-v);
  return convex_hull(pts);
}

bool contains(const Polytope& p, const Vector& x, double tol) {
  if (x.size() != p.dim()) return false;
  return std::all_of(p.facets().rows.begin(), p.facets().rows.end(),
                     [&](const Halfspace& h) { return h.normal.dot(x) <= h.offset + tol; });
}

Vector support_point(const Polytope& p, const Vector& u) {
  if (u.size() != p.dim()) fail(ErrorCode::kInvalidArgument, "support_point: dimension mismatch");
  if (u.norm() == 0.0) fail(ErrorCode::kInvalidArgument, "support_point: zero direction");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : p.vertices()) best = std::max(best, u.dot(v));
  const double tol = 1e-12 * u.norm() * std::max(1.0, p.scale());
  const Vector* arg = nullptr;
  for (const auto& v : p.vertices()) {
    if (u.dot(v) < best - tol) continue;
    if (!arg || std::lexicographical_compare(arg->begin(), arg->end(), v.begin(), v.end()))
      arg = &v;
  }
  return *arg;
}

double width(const Polytope& p, const Vector& u) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& v : p.vertices()) {
    const double s = u.dot(v);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return hi - lo;
}

HalfspaceList facets(const Polytope& p) { return p.facets(); }

double diameter(const Polytope& p) {
  double best = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      best = std::max(best, (p.vertex(i) - p.vertex(j)).norm());
  return best;
}

std::string content_hash(const Polytope& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto eat = [&h](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  eat(static_cast<std::uint64_t>(p.dim()));
  for (const auto& v : p.vertices()) {
    for (double x : v) eat(std::bit_cast<std::uint64_t>(x == 0.0 ? 0.0 : x));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double vertex_set_distance(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
  auto directed = [](const Polytope& x, const Polytope& y) {
    double worst = 0.0;
    for (const auto& v : x.vertices()) {
      double near = std::numeric_limits<double>::infinity();
      for (const auto& w : y.vertices()) near = std::min(near, (v - w).norm());
      worst = std::max(worst, near);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace normvol
