#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace normvol {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 6;

/// Absolute vertex dedup tolerance for a body scaled to circumradius 1.
inline constexpr double kDedupTol = 1e-9;

/// {x : <normal, x> <= offset}; `normal` has unit length.
struct Halfspace {
  Vector normal;
  double offset = 0.0;
};

struct HalfspaceList {
  std::vector<Halfspace> rows;
};

/// A full-dimensional convex polytope stored by its extreme points.
///
/// Instances are only produced by `convex_hull` (and the operations built on
/// it), so the vertex list is always irredundant. In the plane the vertices
/// run counterclockwise. Facets and volume are computed once on construction.
class Polytope {
 public:
  int dim() const { return dim_; }
  const std::vector<Vector>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vector& vertex(std::size_t i) const { return vertices_[i]; }

  /// True when the vertex set is closed under negation.
  bool symmetric() const { return symmetric_; }

  double volume() const { return volume_; }
  const HalfspaceList& facets() const { return facets_; }

  /// Largest distance of a vertex from the vertex centroid; the length scale
  /// every tolerance in the kernel is measured against.
  double scale() const { return scale_; }

  Vector centroid() const;

 private:
  friend Polytope convex_hull(std::span<const Vector> points);

  Polytope() = default;

  int dim_ = 0;
  std::vector<Vector> vertices_;
  HalfspaceList facets_;
  bool symmetric_ = false;
  double volume_ = 0.0;
  double scale_ = 1.0;
};

/// Extreme points of the hull of `points`. Throws kFlatInput when the points
/// do not span the ambient space, kInvalidArgument on bad dimensions or
/// non-finite coordinates.
///
/// Output order is deterministic: in 2D counterclockwise starting from the
/// extreme point with the smallest input index; in higher dimensions the input
/// order of the surviving points. Hulling a vertex list therefore reproduces
/// it unchanged.
Polytope convex_hull(std::span<const Vector> points);

inline Polytope convex_hull(const std::vector<Vector>& points) {
  return convex_hull(std::span<const Vector>(points));
}

/// Lebesgue volume of the hull of `points`, or 0 when they are flat. Never
/// throws on degenerate input, so it is usable inside subset enumeration.
double hull_volume(std::span<const Vector> points);

double volume(const Polytope& p);

/// Signed shoelace area of a polygon given in cyclic order.
double shoelace_area(std::span<const Vector> ring);

/// The polar body. Requires the origin strictly inside `p`; throws
/// kPolarUndefined otherwise.
Polytope polar(const Polytope& p);

/// Throws kSingularMap when |det m| <= 1e-12.
Polytope linear_image(const Polytope& p, const Matrix& m);

Polytope translate(const Polytope& p, const Vector& shift);

/// conv(P u -P).
Polytope central_symmetral(const Polytope& p);

bool contains(const Polytope& p, const Vector& x, double tol);

/// A vertex maximizing <u, .>; ties go to the lexicographically largest
/// vertex. Throws kInvalidArgument for a zero direction.
Vector support_point(const Polytope& p, const Vector& u);

/// Max minus min of <u, v> over the vertices.
double width(const Polytope& p, const Vector& u);

HalfspaceList facets(const Polytope& p);

double diameter(const Polytope& p);

/// Minimum facet offset, i.e. the distance from the origin to the boundary
/// (negative when the origin is outside).
double origin_depth(const Polytope& p);

/// Stable 64-bit FNV-1a digest of (dim, vertex coordinates), hex encoded.
std::string content_hash(const Polytope& p);

/// Hausdorff distance between the two vertex sets.
double vertex_set_distance(const Polytope& a, const Polytope& b);

}  // namespace normvol
