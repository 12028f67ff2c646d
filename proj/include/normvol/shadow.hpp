#pragma once

#include "normvol/geometry.hpp"
#include "normvol/solvers.hpp"

#include <vector>

namespace normvol {

/// C(t) = conv{x + t * speed_x * direction : x in base}.
struct ShadowSystem {
  std::vector<Vector> base;
  std::vector<double> speeds;
  Vector direction;

  /// Throws kInvalidArgument on length/dimension mismatch or zero direction.
  void validate() const;
};

struct ConvexityReport {
  std::vector<double> grid;
  std::vector<double> values;
  /// min over interior grid points of v[i-1] - 2 v[i] + v[i+1].
  double min_second_difference = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Throws kZeroVolume (message carries t) when C(t) is flat.
Polytope evaluate(const ShadowSystem& system, double t);

/// Samples vol(C(t)) on `steps` uniform grid points over [t_min, t_max].
ConvexityReport volume_profile(const ShadowSystem& system, double t_min, double t_max, int steps,
                               double tol = 1e-8);

/// Samples 1 / vol((C(t) - s(C(t)))°), the reciprocal Santalo-centered polar
/// volume, on the same kind of grid.
ConvexityReport mr_profile(const ShadowSystem& system, double t_min, double t_max, int steps,
                           double tol = 1e-6, const SolverBudget& budget = {});

/// Pass/fail rule shared by both profiles: min second difference
/// >= -tol * max(values).
ConvexityReport check_convexity(std::vector<double> grid, std::vector<double> values, double tol);

enum class CascadeStatus { kReached, kStepCap, kNoProgress };

const char* to_string(CascadeStatus status);

struct CascadeResult {
  std::vector<Vector> points;
  /// f(Y) = sum |y_i| before the first and after every projection.
  std::vector<double> trace;
  std::vector<int> chosen;  // hyperplane index applied at each step
  CascadeStatus status = CascadeStatus::kStepCap;
};

/// Repeatedly projects every point onto the hyperplane (through o, given by
/// its normal) whose projection decreases f the most, until f <= eps, no
/// hyperplane makes progress, or `max_steps` projections were applied.
/// Throws kInvalidFamily unless the normals span R^d.
CascadeResult projection_cascade(const std::vector<Vector>& normals, std::vector<Vector> points, double eps,
                                 int max_steps);

}  // namespace normvol
