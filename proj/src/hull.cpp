#include "hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>

namespace normvol::detail {
namespace {

constexpr double kVisibleTol = 1e-11;
constexpr double kRankTol = 1e-10;

double factorial(int d) {
  double f = 1.0;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

double cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

struct Prepared {
  std::vector<std::size_t> unique;  // indices into the caller's list
  Vector center;
  double scale = 0.0;
};

Prepared prepare(std::span<const Vector> points) {
  Prepared out;
  const auto d = points.front().size();
  out.center = Vector::Zero(d);
  for (const auto& p : points) out.center += p;
  out.center /= static_cast<double>(points.size());
  for (const auto& p : points)
    out.scale = std::max(out.scale, (p - out.center).norm());
  const double tol = kDedupTol * out.scale;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dup = false;
    for (auto j : out.unique) {
      if ((points[i] - points[j]).lpNorm<Eigen::Infinity>() <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) out.unique.push_back(i);
  }
  return out;
}

std::optional<HullData> hull_2d(std::span<const Vector> points,
                                const Prepared& prep, bool with_facets) {
  std::vector<std::size_t> idx = prep.unique;
  if (idx.size() < 3) return std::nullopt;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& p = points[a];
    const auto& q = points[b];
    return p[0] < q[0] || (p[0] == q[0] && (p[1] < q[1] || (p[1] == q[1] && a < b)));
  });
  const double tol = kDedupTol * prep.scale;
  std::vector<std::size_t> chain(2 * idx.size());
  std::size_t k = 0;
  auto keep_left = [&](std::size_t lo, std::size_t i) {
    while (k >= lo + 2) {
      const auto& o = points[chain[k - 2]];
      const auto& a = points[chain[k - 1]];
      const auto& b = points[i];
      if (cross(o, a, b) > tol * (b - o).norm()) break;
      --k;
    }
    chain[k++] = i;
  };
  for (auto i : idx) keep_left(0, i);
  const std::size_t lower = k;
  for (auto it = idx.rbegin() + 1; it != idx.rend(); ++it) {
    keep_left(lower - 1, *it);
  }
  chain.resize(k - 1);
  if (chain.size() < 3) return std::nullopt;

  const auto first = std::min_element(chain.begin(), chain.end());
  std::rotate(chain.begin(), first, chain.end());

  HullData out;
  out.scale = prep.scale;
  out.extreme = chain;
  double area = 0.0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& a = points[chain[i]];
    const auto& b = points[chain[(i + 1) % chain.size()]];
    area += a[0] * b[1] - a[1] * b[0];
  }
  out.volume = 0.5 * area;
  if (out.volume <= tol * prep.scale) return std::nullopt;
  if (with_facets) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const auto& a = points[chain[i]];
      const auto& b = points[chain[(i + 1) % chain.size()]];
      Vector n(2);
      n << b[1] - a[1], a[0] - b[0];
      n.normalize();
      out.facets.push_back({n, 0.5 * (n.dot(a) + n.dot(b))});
    }
  }
  return out;
}

struct Facet {
  std::array<int, kMaxDim> verts{};
  Vector normal;
  double offset = 0.0;
  bool alive = true;
};

class IncrementalHull {
 public:
  IncrementalHull(std::span<const Vector> points, const Prepared& prep)
      : pts_(points), prep_(prep), d_(static_cast<int>(points.front().size())) {}

  bool build() {
    std::vector<std::size_t> simplex;
    if (!initial_simplex(simplex)) return false;
    interior_ = Vector::Zero(d_);
    for (auto i : simplex) interior_ += pts_[i];
    interior_ /= static_cast<double>(simplex.size());
    for (int skip = 0; skip <= d_; ++skip) {
      std::vector<int> verts;
      for (int j = 0; j <= d_; ++j)
        if (j != skip) verts.push_back(static_cast<int>(simplex[j]));
      add_facet(verts);
    }
    for (auto i : prep_.unique) {
      if (std::find(simplex.begin(), simplex.end(), i) != simplex.end()) continue;
      insert(i);
    }
    return true;
  }

  HullData finish(bool with_facets) const {
    HullData out;
    out.scale = prep_.scale;
    const double dfact = factorial(d_);
    Matrix q(d_, d_);
    for (const auto& f : facets_) {
      if (!f.alive) continue;
      for (int r = 0; r < d_; ++r) q.row(r) = (pts_[f.verts[r]] - interior_).transpose();
      out.volume += std::abs(q.determinant()) / dfact;
    }

    // Group simplicial facets lying in a common hyperplane.
    const double tol = kDedupTol * prep_.scale;
    std::vector<Halfspace> groups;
    for (const auto& f : facets_) {
      if (!f.alive) continue;
      bool found = false;
      for (const auto& g : groups) {
        if ((g.normal - f.normal).lpNorm<Eigen::Infinity>() <= kDedupTol &&
            std::abs(g.offset - f.offset) <= tol) {
          found = true;
          break;
        }
      }
      if (!found) groups.push_back({f.normal, f.offset});
    }

    std::vector<char> on_hull(pts_.size(), 0);
    for (const auto& f : facets_)
      if (f.alive)
        for (int r = 0; r < d_; ++r) on_hull[f.verts[r]] = 1;

    for (auto i : prep_.unique) {
      if (!on_hull[i]) continue;
      std::vector<const Vector*> tight;
      for (const auto& g : groups)
        if (std::abs(g.normal.dot(pts_[i]) - g.offset) <= tol) tight.push_back(&g.normal);
      if (static_cast<int>(tight.size()) < d_) continue;
      Matrix n(static_cast<Eigen::Index>(tight.size()), d_);
      for (std::size_t r = 0; r < tight.size(); ++r) n.row(r) = tight[r]->transpose();
      Eigen::FullPivLU<Matrix> lu(n);
      lu.setThreshold(kRankTol);
      if (lu.rank() == d_) out.extreme.push_back(i);
    }

    if (with_facets) {
      for (auto& g : groups) {
        double off = -std::numeric_limits<double>::infinity();
        for (auto i : out.extreme) off = std::max(off, g.normal.dot(pts_[i]));
        out.facets.push_back({g.normal, off});
      }
    }
    return out;
  }

 private:
  bool initial_simplex(std::vector<std::size_t>& simplex) const {
    const auto& uniq = prep_.unique;
    if (static_cast<int>(uniq.size()) < d_ + 1) return false;
    std::size_t first = uniq.front();
    for (auto i : uniq) {
      const auto& p = pts_[i];
      const auto& q = pts_[first];
      if (std::lexicographical_compare(p.begin(), p.end(), q.begin(), q.end())) first = i;
    }
    simplex.push_back(first);
    std::vector<Vector> basis;
    const double tol = kDedupTol * prep_.scale;
    while (static_cast<int>(simplex.size()) < d_ + 1) {
      double best = -1.0;
      std::size_t arg = 0;
      Vector best_dir;
      for (auto i : uniq) {
        Vector r = pts_[i] - pts_[first];
        for (const auto& b : basis) r -= r.dot(b) * b;
        const double dist = r.norm();
        if (dist > best) {
          best = dist;
          arg = i;
          best_dir = r;
        }
      }
      if (best <= tol) return false;
      basis.push_back(best_dir / best);
      simplex.push_back(arg);
    }
    return true;
  }

  void add_facet(const std::vector<int>& verts) {
    Facet f;
    std::copy(verts.begin(), verts.end(), f.verts.begin());
    std::sort(f.verts.begin(), f.verts.begin() + d_);
    const Vector& base = pts_[f.verts[0]];
    Matrix a(d_ - 1, d_);
    for (int r = 1; r < d_; ++r) a.row(r - 1) = (pts_[f.verts[r]] - base).transpose();
    Vector n(d_);
    Matrix minor(d_ - 1, d_ - 1);
    for (int j = 0; j < d_; ++j) {
      for (int c = 0, cc = 0; c < d_; ++c) {
        if (c == j) continue;
        minor.col(cc++) = a.col(c);
      }
      const double det = d_ == 1 ? 1.0 : minor.determinant();
      n[j] = (j % 2 == 0) ? det : -det;
    }
    n.normalize();
    double off = 0.0;
    for (int r = 0; r < d_; ++r) off += n.dot(pts_[f.verts[r]]);
    off /= d_;
    if (n.dot(interior_) > off) {
      n = -n;
      off = -off;
    }
    f.normal = std::move(n);
    f.offset = off;
    facets_.push_back(std::move(f));
  }

  void insert(std::size_t i) {
    const Vector& p = pts_[i];
    const double tol = kVisibleTol * prep_.scale;
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (facets_[f].alive && facets_[f].normal.dot(p) - facets_[f].offset > tol)
        visible.push_back(f);
    }
    if (visible.empty()) return;

    std::map<std::vector<int>, int> ridges;
    for (auto f : visible) {
      const auto& v = facets_[f].verts;
      for (int skip = 0; skip < d_; ++skip) {
        std::vector<int> ridge;
        ridge.reserve(d_ - 1);
        for (int j = 0; j < d_; ++j)
          if (j != skip) ridge.push_back(v[j]);
        ++ridges[ridge];
      }
      facets_[f].alive = false;
    }
    for (auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      std::vector<int> verts = ridge;
      verts.push_back(static_cast<int>(i));
      add_facet(verts);
    }
    if (facets_.size() > 4 * live_count()) compact();
  }

  std::size_t live_count() const {
    return static_cast<std::size_t>(
        std::count_if(facets_.begin(), facets_.end(), [](const Facet& f) { return f.alive; }));
  }

  void compact() {
    std::erase_if(facets_, [](const Facet& f) { return !f.alive; });
  }

  std::span<const Vector> pts_;
  const Prepared& prep_;
  int d_;
  Vector interior_;
  std::vector<Facet> facets_;
};

}  // namespace

std::optional<HullData> compute_hull(std::span<const Vector> points, bool with_facets) {
  if (points.empty()) return std::nullopt;
  const auto prep = prepare(points);
  if (prep.scale <= 0.0) return std::nullopt;
  if (points.front().size() == 2) return hull_2d(points, prep, with_facets);
  IncrementalHull hull(points, prep);
  if (!hull.build()) return std::nullopt;
  auto out = hull.finish(with_facets);
  if (out.volume <= kDedupTol * std::pow(prep.scale, static_cast<double>(points.front().size())))
    return std::nullopt;
  return out;
}

}  // namespace normvol::detail
