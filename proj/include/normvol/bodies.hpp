#pragma once

#include "normvol/geometry.hpp"
#include "normvol/rng.hpp"

namespace normvol {

/// d+1 vertices, centroid at the origin, circumradius 1.
Polytope regular_simplex(int d);

/// conv{+-e_i}.
Polytope cross_polytope(int d);

/// [-1, 1]^d.
Polytope cube(int d);

/// Regular n-gon centered at the origin with a vertex on the positive x-axis.
Polytope regular_ngon(int n, double circumradius = 1.0);

/// conv(S u -S) for the regular simplex S.
Polytope simplex_symmetral(int d);

/// conv(S1 u S2 u -S1 u -S2): S1 a regular k-simplex in the first k
/// coordinates, S2 a regular (d-k)-simplex in the remaining ones.
Polytope simplex_pair_body(int d, int k);

/// Binomial coefficient as an exact integer (fits for n <= 60).
unsigned long long binomial(int n, int k);

struct AffineRegularity {
  bool regular = false;
  double tau = 0.0;
  /// Largest |p_{j+2} - p_{j-1} - tau (p_{j+1} - p_j)| over j.
  double max_residual = 0.0;
};

/// Coxeter criterion: fits tau by least squares to
/// p_{j+2} - p_{j-1} = tau (p_{j+1} - p_j) and accepts when tau >= 0 and the
/// worst residual is at most tol * diameter. Polygons with fewer than four
/// vertices are always accepted with tau = 0.
AffineRegularity is_affinely_regular(const Polytope& polygon, double tol);

/// Regular hexagon whose polar is its own quarter-turn rotation.
Polytope radon_hexagon();

struct RadonCertificate {
  Matrix normalizing_map;
  double max_deviation = 0.0;
  bool accepted = false;
};

/// Maps the largest inscribed parallelogram onto (+-1, 0), (0, +-1) and
/// measures how far the quarter-turn of the normalized body is from its polar.
/// Throws kNotSymmetric / kPolarUndefined on bad input and
/// kCertificateFailed if the parallelogram is degenerate.
RadonCertificate radon_certificate(const Polytope& polygon, double tol);

struct RandomPolygon {
  Polytope body;
  int k_dirs = 0;
};

/// Symmetric random polygon: k directions uniform on the circle, radii
/// log-uniform in [0.5, 2], hull of the +- points, rescaled to area pi.
RandomPolygon random_symmetric_polygon(CounterRng& rng, int k_min = 3, int k_max = 8);

}  // namespace normvol
