#include "normvol/normed_volume.hpp"

#include "normvol/error.hpp"

#include <cmath>
#include <numbers>

namespace normvol {
namespace {

std::string cache_key(const Polytope& body, const SolverBudget& b) {
  return content_hash(body) + ":" + std::to_string(b.max_subsets) + ":" + std::to_string(b.restarts) + ":" +
         std::to_string(b.max_iters) + ":" + std::to_string(b.rng_seed);
}

double factorial(int d) {
  double f = 1.0;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

void require_symmetric(const Polytope& body, const char* who) {
  if (!body.symmetric()) fail(ErrorCode::kNotSymmetric, std::string(who) + ": unit ball must be o-symmetric");
}

}  // namespace

std::string_view to_string(VolumeKind kind) {
  switch (kind) {
    case VolumeKind::kBusemann: return "bus";
    case VolumeKind::kHolmesThompson: return "ht";
    case VolumeKind::kMass: return "mass";
    case VolumeKind::kMassStar: return "mass-star";
  }
  return "?";
}

std::optional<VolumeKind> parse_volume_kind(std::string_view tag) {
  if (tag == "bus") return VolumeKind::kBusemann;
  if (tag == "ht") return VolumeKind::kHolmesThompson;
  if (tag == "mass") return VolumeKind::kMass;
  if (tag == "mass-star") return VolumeKind::kMassStar;
  return std::nullopt;
}

double unit_ball_volume(int d) {
  if (d < 1) fail(ErrorCode::kInvalidArgument, "unit_ball_volume: need d >= 1");
  return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

ExtremalWitness NormalizerCache::cross(const Polytope& body, const SolverBudget& budget) {
  const auto key = cache_key(body, budget);
  {
    std::lock_guard lock(mu_);
    if (auto it = cross_.find(key); it != cross_.end()) return it->second;
  }
  auto w = max_cross_polytope(body, budget);
  std::lock_guard lock(mu_);
  return cross_.try_emplace(key, std::move(w)).first->second;
}

ExtremalWitness NormalizerCache::parallelotope(const Polytope& body, const SolverBudget& budget) {
  const auto key = cache_key(body, budget);
  {
    std::lock_guard lock(mu_);
    if (auto it = para_.find(key); it != para_.end()) return it->second;
  }
  auto w = min_circumscribed_parallelotope(body, budget);
  std::lock_guard lock(mu_);
  return para_.try_emplace(key, std::move(w)).first->second;
}

Normalizer volume_normalizer(const Polytope& body, VolumeKind kind, const SolverBudget& budget,
                             NormalizerCache* cache) {
  require_symmetric(body, "volume_normalizer");
  const int d = body.dim();
  switch (kind) {
    case VolumeKind::kBusemann:
      return {unit_ball_volume(d) / body.volume(), true};
    case VolumeKind::kHolmesThompson:
      return {polar(body).volume() / unit_ball_volume(d), true};
    case VolumeKind::kMass: {
      const auto w = cache ? cache->cross(body, budget) : max_cross_polytope(body, budget);
      return {std::pow(2.0, d) / factorial(d) / w.value, w.exact};
    }
    case VolumeKind::kMassStar: {
      const auto w = cache ? cache->parallelotope(body, budget) : min_circumscribed_parallelotope(body, budget);
      return {std::pow(2.0, d) / w.value, w.exact};
    }
  }
  fail(ErrorCode::kInvalidArgument, "volume_normalizer: unknown kind");
}

double normed_volume(const Polytope& body, const Polytope& set, VolumeKind kind, const SolverBudget& budget,
                     NormalizerCache* cache) {
  if (set.dim() != body.dim()) fail(ErrorCode::kInvalidArgument, "normed_volume: dimension mismatch");
  return volume_normalizer(body, kind, budget, cache).factor * set.volume();
}

MuResult mu(const Polytope& body, int n, VolumeKind kind, const SolverBudget& budget, NormalizerCache* cache) {
  require_symmetric(body, "mu");
  const int d = body.dim();
  if (n < d + 1) fail(ErrorCode::kInvalidArgument, "mu: need n >= d+1");
  const auto norm = volume_normalizer(body, kind, budget, cache);
  MuResult out{kind, n, 0.0,
               (d == 2 && n % 2 == 0) ? max_inscribed_polygon_symmetric(body, n, budget)
                                      : max_inscribed_polytope(body, n, budget),
               norm.factor, false};
  out.value = out.normalizer * out.witness.value;
  out.exact = out.witness.exact && norm.exact;
  return out;
}

}  // namespace normvol
