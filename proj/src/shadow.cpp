#include "normvol/shadow.hpp"

#include "normvol/error.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace normvol {

void ShadowSystem::validate() const {
  if (base.empty()) fail(ErrorCode::kInvalidArgument, "shadow system: empty base");
  if (speeds.size() != base.size()) fail(ErrorCode::kInvalidArgument, "shadow system: speeds/base length mismatch");
  const auto d = direction.size();
  if (d < kMinDim || d > kMaxDim) fail(ErrorCode::kInvalidArgument, "shadow system: dimension out of range");
  for (const auto& x : base)
    if (x.size() != d) fail(ErrorCode::kInvalidArgument, "shadow system: base point dimension mismatch");
  if (direction.norm() == 0.0) fail(ErrorCode::kInvalidArgument, "shadow system: zero direction");
}

Polytope evaluate(const ShadowSystem& system, double t) {
  system.validate();
  std::vector<Vector> pts;
  pts.reserve(system.base.size());
  for (std::size_t i = 0; i < system.base.size(); ++i)
    pts.push_back(system.base[i] + (t * system.speeds[i]) * system.direction);
  try {
    return convex_hull(pts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kFlatInput) throw;
    char buf[96];
    std::snprintf(buf, sizeof buf, "shadow system: C(t) is flat at t = %.17g", t);
    fail(ErrorCode::kZeroVolume, buf);
  }
}

ConvexityReport check_convexity(std::vector<double> grid, std::vector<double> values, double tol) {
  ConvexityReport r;
  r.tol = tol;
  r.grid = std::move(grid);
  r.values = std::move(values);
  double vmax = 0.0;
  for (double v : r.values) vmax = std::max(vmax, std::abs(v));
  r.min_second_difference = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < r.values.size(); ++i)
    r.min_second_difference = std::min(r.min_second_difference, r.values[i - 1] - 2.0 * r.values[i] + r.values[i + 1]);
  r.pass = r.min_second_difference >= -tol * vmax;
  return r;
}

namespace {

std::vector<double> make_grid(double t_min, double t_max, int steps) {
  if (steps < 3) fail(ErrorCode::kInvalidArgument, "profile: need at least 3 grid points");
  if (!(t_max > t_min)) fail(ErrorCode::kInvalidArgument, "profile: need t_min < t_max");
  std::vector<double> g(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) g[static_cast<std::size_t>(i)] = t_min + (t_max - t_min) * i / (steps - 1);
  return g;
}

}  // namespace

ConvexityReport volume_profile(const ShadowSystem& system, double t_min, double t_max, int steps, double tol) {
  auto grid = make_grid(t_min, t_max, steps);
  std::vector<double> values;
  values.reserve(grid.size());
  for (double t : grid) values.push_back(evaluate(system, t).volume());
  return check_convexity(std::move(grid), std::move(values), tol);
}

ConvexityReport mr_profile(const ShadowSystem& system, double t_min, double t_max, int steps, double tol,
                           const SolverBudget& budget) {
  auto grid = make_grid(t_min, t_max, steps);
  std::vector<double> values;
  values.reserve(grid.size());
  for (double t : grid) {
    const Polytope c = evaluate(system, t);
    const Vector s = santalo_point(c, budget);
    values.push_back(1.0 / polar_volume_about(c, s));
  }
  return check_convexity(std::move(grid), std::move(values), tol);
}

const char* to_string(CascadeStatus status) {
  switch (status) {
    case CascadeStatus::kReached: return "reached";
    case CascadeStatus::kStepCap: return "step-cap";
    case CascadeStatus::kNoProgress: return "no-progress";
  }
  return "?";
}

CascadeResult projection_cascade(const std::vector<Vector>& normals, std::vector<Vector> points, double eps,
                                 int max_steps) {
  if (normals.empty()) fail(ErrorCode::kInvalidFamily, "projection_cascade: no hyperplanes");
  const auto d = normals.front().size();
  Matrix stacked(static_cast<Eigen::Index>(normals.size()), d);
  std::vector<Vector> unit;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() != d || normals[i].norm() == 0.0)
      fail(ErrorCode::kInvalidFamily, "projection_cascade: bad normal");
    unit.push_back(normals[i].normalized());
    stacked.row(static_cast<Eigen::Index>(i)) = unit.back().transpose();
  }
  Eigen::FullPivLU<Matrix> lu(stacked);
  lu.setThreshold(1e-10);
  if (lu.rank() != d) fail(ErrorCode::kInvalidFamily, "projection_cascade: normals do not span, hyperplanes meet in more than o");
  for (const auto& p : points)
    if (p.size() != d) fail(ErrorCode::kInvalidArgument, "projection_cascade: point dimension mismatch");

  auto f = [](const std::vector<Vector>& y) {
    double s = 0.0;
    for (const auto& p : y) s += p.norm();
    return s;
  };
  CascadeResult out;
  double cur = f(points);
  out.trace.push_back(cur);
  for (int step = 0;; ++step) {
    if (cur <= eps) {
      out.status = CascadeStatus::kReached;
      break;
    }
    if (step >= max_steps) {
      out.status = CascadeStatus::kStepCap;
      break;
    }
    int best = -1;
    double best_val = cur;
    for (std::size_t h = 0; h < unit.size(); ++h) {
      double val = 0.0;
      for (const auto& p : points) val += (p - p.dot(unit[h]) * unit[h]).norm();
      if (val < best_val) {
        best_val = val;
        best = static_cast<int>(h);
      }
    }
    if (best < 0) {
      out.status = CascadeStatus::kNoProgress;
      break;
    }
    const Vector& n = unit[static_cast<std::size_t>(best)];
    for (auto& p : points) p -= p.dot(n) * n;
    cur = f(points);
    out.trace.push_back(cur);
    out.chosen.push_back(best);
  }
  out.points = std::move(points);
  return out;
}

}  // namespace normvol
