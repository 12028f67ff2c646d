#pragma once

#include "normvol/geometry.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace normvol::detail {

struct HullData {
  /// Indices of the extreme points in the caller's point list, in output
  /// order (see `convex_hull`).
  std::vector<std::size_t> extreme;
  /// Irredundant facets with unit normals.
  std::vector<Halfspace> facets;
  double volume = 0.0;
  double scale = 0.0;
};

/// nullopt when the points are flat (affine hull of dimension < d).
std::optional<HullData> compute_hull(std::span<const Vector> points,
                                     bool with_facets);

}  // namespace normvol::detail
