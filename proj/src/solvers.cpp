#include "normvol/solvers.hpp"

#include "normvol/bodies.hpp"
#include "normvol/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace normvol {
namespace {

constexpr double kTieRel = 1e-12;

double factorial(int d) {
  double f = 1.0;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

double binomial_real(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

bool better(double candidate, double best) {
  if (std::isinf(best)) return candidate > best;
  return candidate > best + kTieRel * std::max(1.0, std::abs(best));
}

struct SubsetResult {
  std::vector<std::size_t> indices;
  double value = -std::numeric_limits<double>::infinity();
  bool exact = false;
};

// Maximizes `objective` over k-subsets of {0..n-1}, each subset given in
// increasing index order.
template <class Objective>
SubsetResult best_subset(std::size_t n, std::size_t k, const SolverBudget& budget, Objective&& objective) {
  SubsetResult out;
  if (binomial_real(n, k) <= static_cast<double>(budget.max_subsets)) {
    out.exact = true;
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
      const double v = objective(c);
      if (out.indices.empty() || better(v, out.value)) {
        out.value = v;
        out.indices = c;
      }
      std::size_t i = k;
      while (i > 0 && c[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
  }

  // Steepest-ascent single swaps from seeded random starts.
  CounterRng rng(budget.rng_seed, 0x5b5e7);
  for (int r = 0; r < budget.restarts; ++r) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(i), static_cast<std::int64_t>(n - 1)));
      std::swap(perm[i], perm[j]);
    }
    std::vector<std::size_t> cur(perm.begin(), perm.begin() + static_cast<long>(k));
    std::sort(cur.begin(), cur.end());
    double cur_val = objective(cur);
    for (int it = 0; it < budget.max_iters; ++it) {
      std::vector<std::size_t> best_set;
      double best_val = cur_val;
      std::vector<char> in(n, 0);
      for (auto i : cur) in[i] = 1;
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (in[b]) continue;
          auto cand = cur;
          cand[a] = b;
          std::sort(cand.begin(), cand.end());
          const double v = objective(cand);
          if (better(v, best_val)) {
            best_val = v;
            best_set = std::move(cand);
          }
        }
      }
      if (best_set.empty()) break;
      cur = std::move(best_set);
      cur_val = best_val;
    }
    if (out.indices.empty() || better(cur_val, out.value) ||
        (!better(out.value, cur_val) && cur < out.indices)) {
      out.indices = cur;
      out.value = cur_val;
    }
  }
  return out;
}

std::vector<Vector> pick(const std::vector<Vector>& v, const std::vector<std::size_t>& idx) {
  std::vector<Vector> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(v[i]);
  return out;
}

ExtremalWitness make_witness(std::vector<Vector> pts, bool exact, std::vector<std::size_t> idx) {
  Polytope obj = convex_hull(pts);
  const double value = obj.volume();
  return ExtremalWitness{std::move(obj), value, exact, std::move(idx)};
}

double ring_area(const std::vector<Vector>& v, const std::vector<std::size_t>& idx) {
  double a = 0.0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto& p = v[idx[i]];
    const auto& q = v[idx[(i + 1) % idx.size()]];
    a += p[0] * q[1] - p[1] * q[0];
  }
  return 0.5 * a;
}

double abs_det(const std::vector<Vector>& v, const std::vector<std::size_t>& idx, int d) {
  Matrix m(d, d);
  for (int c = 0; c < d; ++c) m.col(c) = v[idx[c]];
  return std::abs(m.determinant());
}

}  // namespace

void SolverBudget::validate() const {
  if (max_subsets == 0 || restarts <= 0 || max_iters <= 0)
    fail(ErrorCode::kInvalidArgument, "SolverBudget: limits must be positive");
}

ExtremalWitness max_inscribed_polytope(const Polytope& body, int n, const SolverBudget& budget) {
  budget.validate();
  const int d = body.dim();
  if (n < d + 1) fail(ErrorCode::kInvalidArgument, "max_inscribed_polytope: need n >= d+1");
  const auto& v = body.vertices();
  const auto count = v.size();
  if (static_cast<std::size_t>(n) >= count) {
    std::vector<std::size_t> all(count);
    std::iota(all.begin(), all.end(), 0);
    return ExtremalWitness{body, body.volume(), true, std::move(all)};
  }
  const auto k = static_cast<std::size_t>(n);
  SubsetResult best;
  if (d == 2) {
    best = best_subset(count, k, budget, [&](const std::vector<std::size_t>& idx) { return ring_area(v, idx); });
  } else if (n == d + 1) {
    const double df = factorial(d);
    best = best_subset(count, k, budget, [&](const std::vector<std::size_t>& idx) {
      Matrix m(d, d);
      for (int c = 0; c < d; ++c) m.col(c) = v[idx[c + 1]] - v[idx[0]];
      return std::abs(m.determinant()) / df;
    });
  } else {
    std::vector<Vector> scratch(k);
    best = best_subset(count, k, budget, [&](const std::vector<std::size_t>& idx) {
      for (std::size_t i = 0; i < k; ++i) scratch[i] = v[idx[i]];
      return hull_volume(scratch);
    });
  }
  return make_witness(pick(v, best.indices), best.exact, best.indices);
}

ExtremalWitness max_inscribed_polygon_symmetric(const Polytope& body, int two_m, const SolverBudget& budget) {
  budget.validate();
  if (body.dim() != 2) fail(ErrorCode::kInvalidArgument, "max_inscribed_polygon_symmetric: polygon expected");
  if (!body.symmetric()) fail(ErrorCode::kNotSymmetric, "max_inscribed_polygon_symmetric: body is not o-symmetric");
  if (two_m < 4 || two_m % 2 != 0)
    fail(ErrorCode::kInvalidArgument, "max_inscribed_polygon_symmetric: need an even vertex count >= 4");
  const auto& v = body.vertices();
  const std::size_t half = v.size() / 2;
  const double tol = 1e-8 * body.scale();
  for (std::size_t i = 0; i < half; ++i) {
    if ((v[i] + v[i + half]).norm() > tol)
      fail(ErrorCode::kNotSymmetric, "max_inscribed_polygon_symmetric: antipodal vertices misaligned");
  }
  const auto m = static_cast<std::size_t>(two_m / 2);
  if (m >= half) {
    std::vector<std::size_t> all(v.size());
    std::iota(all.begin(), all.end(), 0);
    return ExtremalWitness{body, body.volume(), true, std::move(all)};
  }
  auto full = [half](const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> ring = idx;
    for (auto i : idx) ring.push_back(i + half);
    return ring;
  };
  const auto best = best_subset(half, m, budget, [&](const std::vector<std::size_t>& idx) {
    return ring_area(v, full(idx));
  });
  const auto ring = full(best.indices);
  return make_witness(pick(v, ring), best.exact, ring);
}

double max_inscribed_ngon_disk(int n, const SolverBudget& budget) {
  if (n < 3) fail(ErrorCode::kInvalidArgument, "max_inscribed_ngon_disk: need n >= 3");
  budget.validate();
  const double two_pi = 2.0 * std::numbers::pi;
  CounterRng rng(budget.rng_seed, 0xd15c);
  double best = 0.0;
  for (int r = 0; r < budget.restarts; ++r) {
    std::vector<double> theta(static_cast<std::size_t>(n));
    for (auto& t : theta) t = rng.uniform(0.0, two_pi);
    std::sort(theta.begin(), theta.end());
    for (int sweep = 0; sweep < budget.max_iters; ++sweep) {
      double moved = 0.0;
      for (int i = 0; i < n; ++i) {
        const double prev = theta[static_cast<std::size_t>((i + n - 1) % n)];
        const double next = theta[static_cast<std::size_t>((i + 1) % n)];
        const double gap = std::fmod(next - prev + 2.0 * two_pi, two_pi);
        const double target = std::fmod(prev + 0.5 * gap, two_pi);
        double delta = std::abs(target - theta[static_cast<std::size_t>(i)]);
        delta = std::min(delta, two_pi - delta);
        moved = std::max(moved, delta);
        theta[static_cast<std::size_t>(i)] = target;
      }
      if (moved < 1e-15) break;
    }
    double area = 0.0;
    for (int i = 0; i < n; ++i) {
      const double gap = std::fmod(theta[static_cast<std::size_t>((i + 1) % n)] - theta[static_cast<std::size_t>(i)] + 2.0 * two_pi, two_pi);
      area += 0.5 * std::sin(gap);
    }
    best = std::max(best, area);
  }
  return best;
}

ExtremalWitness max_cross_polytope(const Polytope& body, const SolverBudget& budget) {
  budget.validate();
  const int d = body.dim();
  const auto& v = body.vertices();
  const double norm = std::pow(2.0, d) / factorial(d);
  auto assemble = [&](const std::vector<Vector>& q, bool exact, std::vector<std::size_t> idx) {
    std::vector<Vector> pts;
    for (const auto& x : q) {
      pts.push_back(x);
      pts.push_back(-x);
    }
    return make_witness(std::move(pts), exact, std::move(idx));
  };

  if (binomial_real(v.size(), static_cast<std::size_t>(d)) <= static_cast<double>(budget.max_subsets)) {
    const auto best = best_subset(v.size(), static_cast<std::size_t>(d), budget,
                                  [&](const std::vector<std::size_t>& idx) { return norm * abs_det(v, idx, d); });
    if (best.value <= 0.0) fail(ErrorCode::kFlatInput, "max_cross_polytope: no independent vertex tuple");
    return assemble(pick(v, best.indices), true, best.indices);
  }

  // det is linear in each column, so each column update jumps to a support
  // point of the corresponding cofactor direction.
  CounterRng rng(budget.rng_seed, 0xc055);
  std::vector<Vector> best_q;
  double best_det = -1.0;
  for (int r = 0; r < budget.restarts; ++r) {
    Matrix q(d, d);
    for (int c = 0; c < d; ++c) q.col(c) = v[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(v.size()) - 1))];
    double cur = std::abs(q.determinant());
    for (int it = 0; it < budget.max_iters; ++it) {
      bool improved = false;
      for (int c = 0; c < d; ++c) {
        Vector cof(d);
        for (int row = 0; row < d; ++row) {
          Matrix e = q;
          e.col(c) = Vector::Unit(d, row);
          cof[row] = e.determinant();
        }
        if (cof.norm() == 0.0) {
          cof = Vector::Unit(d, c);
        }
        const Vector plus = support_point(body, cof);
        const Vector minus = support_point(body, -cof);
        const Vector cand = std::abs(cof.dot(plus)) >= std::abs(cof.dot(minus)) ? plus : minus;
        Matrix trial = q;
        trial.col(c) = cand;
        const double val = std::abs(trial.determinant());
        if (better(val, cur)) {
          q = trial;
          cur = val;
          improved = true;
        }
      }
      if (!improved) break;
    }
    if (better(cur, best_det)) {
      best_det = cur;
      best_q.clear();
      for (int c = 0; c < d; ++c) best_q.push_back(q.col(c));
    }
  }
  if (best_det <= 0.0) fail(ErrorCode::kFlatInput, "max_cross_polytope: no independent vertex tuple");
  std::vector<std::size_t> idx;
  for (const auto& x : best_q) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if ((v[i] - x).norm() == 0.0) {
        idx.push_back(i);
        break;
      }
  }
  return assemble(best_q, false, std::move(idx));
}

namespace {

struct Slab {
  double lo;
  double hi;
};

Slab slab(const Polytope& body, const Vector& u) {
  Slab s{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& v : body.vertices()) {
    const double t = u.dot(v);
    s.lo = std::min(s.lo, t);
    s.hi = std::max(s.hi, t);
  }
  return s;
}

Vector direction(double angle) {
  Vector u(2);
  u << std::cos(angle), std::sin(angle);
  return u;
}

// Unit-row frame -> parallelotope volume prod(width_i) / |det|.
double frame_volume(const Polytope& body, const Matrix& frame) {
  const double det = std::abs(frame.determinant());
  if (det < 1e-12) return std::numeric_limits<double>::infinity();
  double vol = 1.0 / det;
  for (int i = 0; i < frame.rows(); ++i) vol *= width(body, frame.row(i).transpose());
  return vol;
}

ExtremalWitness parallelotope_from_frame(const Polytope& body, const Matrix& frame, bool exact) {
  const int d = body.dim();
  std::vector<Slab> slabs;
  for (int i = 0; i < d; ++i) slabs.push_back(slab(body, frame.row(i).transpose()));
  const Eigen::FullPivLU<Matrix> lu(frame);
  std::vector<Vector> corners;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vector rhs(d);
    for (int i = 0; i < d; ++i) rhs[i] = (mask >> i) & 1 ? slabs[static_cast<std::size_t>(i)].hi : slabs[static_cast<std::size_t>(i)].lo;
    corners.push_back(lu.solve(rhs));
  }
  return make_witness(std::move(corners), exact, {});
}

}  // namespace

ExtremalWitness min_circumscribed_parallelotope(const Polytope& body, const SolverBudget& budget) {
  budget.validate();
  const int d = body.dim();
  if (d == 2) {
    std::vector<double> events;
    for (const auto& h : body.facets().rows) {
      double a = std::atan2(h.normal[1], h.normal[0]);
      a = std::fmod(a + 2.0 * std::numbers::pi, std::numbers::pi);
      events.push_back(a);
    }
    std::sort(events.begin(), events.end());
    std::vector<double> uniq;
    for (double a : events)
      if (uniq.empty() || a - uniq.back() > 1e-12) uniq.push_back(a);
    if (uniq.size() > 1 && uniq.front() + std::numbers::pi - uniq.back() <= 1e-12) uniq.pop_back();

    auto area = [&](double phi, double theta) {
      const double s = std::abs(std::sin(theta - phi));
      if (s < 1e-12) return std::numeric_limits<double>::infinity();
      return width(body, direction(phi)) * width(body, direction(theta)) / s;
    };
    double best = std::numeric_limits<double>::infinity();
    double best_phi = 0.0;
    double best_theta = 0.0;
    auto consider = [&](double phi, double theta) {
      const double a = area(phi, theta);
      if (std::isinf(best) ? a < best : a < best - kTieRel * best) {
        best = a;
        best_phi = phi;
        best_theta = theta;
      }
    };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (double phi : uniq) {
      for (std::size_t b = 0; b < uniq.size(); ++b) {
        const double lo = uniq[b];
        const double hi = b + 1 < uniq.size() ? uniq[b + 1] : uniq.front() + std::numbers::pi;
        consider(phi, lo);
        consider(phi, hi);
        double x0 = lo;
        double x3 = hi;
        double x1 = x3 - inv_phi * (x3 - x0);
        double x2 = x0 + inv_phi * (x3 - x0);
        double f1 = area(phi, x1);
        double f2 = area(phi, x2);
        for (int it = 0; it < 80 && x3 - x0 > 1e-13; ++it) {
          if (f1 <= f2) {
            x3 = x2;
            x2 = x1;
            f2 = f1;
            x1 = x3 - inv_phi * (x3 - x0);
            f1 = area(phi, x1);
          } else {
            x0 = x1;
            x1 = x2;
            f1 = f2;
            x2 = x0 + inv_phi * (x3 - x0);
            f2 = area(phi, x2);
          }
        }
        consider(phi, f1 <= f2 ? x1 : x2);
      }
    }
    Matrix frame(2, 2);
    frame.row(0) = direction(best_phi).transpose();
    frame.row(1) = direction(best_theta).transpose();
    return parallelotope_from_frame(body, frame, true);
  }

  // Candidate frames from facet normals, then seeded row-perturbation descent.
  std::vector<Vector> dirs;
  for (const auto& h : body.facets().rows) {
    const bool seen = std::any_of(dirs.begin(), dirs.end(), [&](const Vector& u) {
      return (u - h.normal).norm() < 1e-9 || (u + h.normal).norm() < 1e-9;
    });
    if (!seen) dirs.push_back(h.normal);
  }
  Matrix best_frame = Matrix::Identity(d, d);
  double best = frame_volume(body, best_frame);
  const auto seeds = best_subset(dirs.size(), static_cast<std::size_t>(d),
                                 SolverBudget{budget.max_subsets, 1, 1, budget.rng_seed},
                                 [&](const std::vector<std::size_t>& idx) {
                                   Matrix f(d, d);
                                   for (int i = 0; i < d; ++i) f.row(i) = dirs[idx[static_cast<std::size_t>(i)]].transpose();
                                   return -frame_volume(body, f);
                                 });
  if (!seeds.indices.empty() && -seeds.value < best) {
    best = -seeds.value;
    for (int i = 0; i < d; ++i) best_frame.row(i) = dirs[seeds.indices[static_cast<std::size_t>(i)]].transpose();
  }

  CounterRng rng(budget.rng_seed, 0xf4a3e);
  auto descend = [&](Matrix frame) {
    double cur = frame_volume(body, frame);
    double step = 0.1;
    for (int it = 0; it < budget.max_iters && step > 1e-10; ++it) {
      const int row = it % d;
      Matrix trial = frame;
      Vector r = trial.row(row).transpose();
      for (int j = 0; j < d; ++j) r[j] += step * rng.normal();
      trial.row(row) = r.normalized().transpose();
      const double val = frame_volume(body, trial);
      if (val < cur) {
        frame = trial;
        cur = val;
        step *= 1.2;
      } else {
        step *= 0.85;
      }
    }
    return std::pair{frame, cur};
  };
  {
    auto [f, val] = descend(best_frame);
    if (val < best) {
      best = val;
      best_frame = f;
    }
  }
  for (int r = 0; r < budget.restarts; ++r) {
    Matrix start(d, d);
    for (int i = 0; i < d; ++i) {
      Vector row(d);
      for (int j = 0; j < d; ++j) row[j] = rng.normal();
      start.row(i) = row.normalized().transpose();
    }
    auto [f, val] = descend(start);
    if (val < best) {
      best = val;
      best_frame = f;
    }
  }
  return parallelotope_from_frame(body, best_frame, false);
}

double polar_volume_about(const Polytope& body, const Vector& s) {
  const auto& rows = body.facets().rows;
  std::vector<Vector> dual;
  dual.reserve(rows.size());
  const double guard = 1e-12 * body.scale();
  for (const auto& h : rows) {
    const double off = h.offset - h.normal.dot(s);
    if (off <= guard) return std::numeric_limits<double>::infinity();
    dual.push_back(h.normal / off);
  }
  // Planar facets are stored in boundary order, so the dual ring is already
  // convex and counterclockwise.
  if (body.dim() == 2) return shoelace_area(dual);
  return hull_volume(dual);
}

namespace {

Vector santalo_newton(const Polytope& body, const SolverBudget& budget) {
  const int d = body.dim();
  const double diam = diameter(body);
  const double hg = 1e-5 * diam;
  const double hh = 1e-4 * diam;
  Vector s = body.centroid();
  double fs = polar_volume_about(body, s);
  auto f = [&](const Vector& x) { return polar_volume_about(body, x); };
  for (int it = 0; it < budget.max_iters; ++it) {
    Vector g(d);
    Matrix hess(d, d);
    for (int i = 0; i < d; ++i) {
      const Vector ei = Vector::Unit(d, i);
      g[i] = (f(s + hg * ei) - f(s - hg * ei)) / (2.0 * hg);
      hess(i, i) = (f(s + hh * ei) - 2.0 * fs + f(s - hh * ei)) / (hh * hh);
      for (int j = 0; j < i; ++j) {
        const Vector ej = Vector::Unit(d, j);
        hess(i, j) = hess(j, i) =
            (f(s + hh * (ei + ej)) - f(s + hh * (ei - ej)) - f(s - hh * (ei - ej)) + f(s - hh * (ei + ej))) /
            (4.0 * hh * hh);
      }
    }
    if (!g.allFinite() || !hess.allFinite()) throw SolverStallError("santalo_point: left the interior", s);
    Vector p;
    const Eigen::LLT<Matrix> llt(hess);
    if (llt.info() == Eigen::Success) {
      p = -llt.solve(g);
    } else {
      p = -g * (diam * diam / std::max(fs, 1e-300));
    }
    double t = 1.0;
    bool moved = false;
    const double before = fs;
    while (t * p.norm() > 1e-14 * diam) {
      const Vector trial = s + t * p;
      const double ft = f(trial);
      if (ft < fs) {
        s = trial;
        fs = ft;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    // Near the minimum the difference quotients are dominated by rounding, so
    // a negligible decrease also counts as converged.
    if (!moved || t * p.norm() < 1e-10 * diam || before - fs <= 1e-14 * before) return s;
  }
  throw SolverStallError("santalo_point: no convergence within max_iters", s);
}

}  // namespace

Vector santalo_point(const Polytope& body, const SolverBudget& budget) {
  budget.validate();
  const int d = body.dim();
  if (body.symmetric()) return Vector::Zero(d);
  // s(AK + c) = A s(K) + c, so solve for the body whitened by its vertex
  // covariance; thin bodies otherwise defeat the fixed difference steps.
  const Vector c = body.centroid();
  Matrix cov = Matrix::Zero(d, d);
  for (const auto& v : body.vertices()) cov += (v - c) * (v - c).transpose();
  cov /= static_cast<double>(body.size());
  const Eigen::LLT<Matrix> llt(cov);
  if (llt.info() != Eigen::Success) return santalo_newton(body, budget);
  const Matrix l = llt.matrixL();
  const Polytope round = linear_image(translate(body, -c), l.inverse());
  try {
    return c + l * santalo_newton(round, budget);
  } catch (const SolverStallError& e) {
    throw SolverStallError(e.what(), c + l * e.best());
  }
}

}  // namespace normvol
