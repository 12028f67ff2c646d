#pragma once

#include "normvol/geometry.hpp"
#include "normvol/solvers.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace normvol {

enum class VolumeKind { kBusemann, kHolmesThompson, kMass, kMassStar };

/// "bus", "ht", "mass", "mass-star".
std::string_view to_string(VolumeKind kind);
std::optional<VolumeKind> parse_volume_kind(std::string_view tag);

/// kappa_d = pi^{d/2} / Gamma(d/2 + 1).
double unit_ball_volume(int d);

/// Memo for the I(B) / C(B) normalizer witnesses, keyed by body content hash
/// and budget. Entries are written once; safe for concurrent use.
class NormalizerCache {
 public:
  ExtremalWitness cross(const Polytope& body, const SolverBudget& budget);
  ExtremalWitness parallelotope(const Polytope& body, const SolverBudget& budget);

 private:
  std::mutex mu_;
  std::map<std::string, ExtremalWitness> cross_;
  std::map<std::string, ExtremalWitness> para_;
};

struct Normalizer {
  double factor = 0.0;
  bool exact = true;
};

/// The scalar multiplying Lebesgue measure for the normed space with unit
/// ball `body`.
Normalizer volume_normalizer(const Polytope& body, VolumeKind kind, const SolverBudget& budget,
                             NormalizerCache* cache = nullptr);

/// vol_B^kind(S). `body` must be o-symmetric.
double normed_volume(const Polytope& body, const Polytope& set, VolumeKind kind,
                     const SolverBudget& budget, NormalizerCache* cache = nullptr);

struct MuResult {
  VolumeKind kind = VolumeKind::kBusemann;
  int n = 0;
  double value = 0.0;
  ExtremalWitness witness;
  double normalizer = 0.0;
  bool exact = false;
};

/// mu_n^kind(B): the normed volume of Q_n(B). In the plane and for even n the
/// o-symmetric inscribed-polygon solver supplies Q_n.
MuResult mu(const Polytope& body, int n, VolumeKind kind, const SolverBudget& budget,
            NormalizerCache* cache = nullptr);

}  // namespace normvol
