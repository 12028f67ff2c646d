#pragma once

#include "normvol/geometry.hpp"

#include <string>
#include <vector>

namespace normvol::svg {

/// Standalone SVG with one closed path per polygon, drawn in order (body
/// first, overlays after). Throws kUnsupported for non-planar input.
std::string polygons(const std::vector<Polytope>& layers);

/// Polyline through (xs[i], ys[i]) with labelled axes. A constant series is
/// drawn as a horizontal line through the middle of the plot.
std::string profile(const std::vector<double>& xs, const std::vector<double>& ys, const std::string& x_label,
                    const std::string& y_label);

}  // namespace normvol::svg
