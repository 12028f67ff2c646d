#pragma once

#include "normvol/error.hpp"
#include "normvol/geometry.hpp"

#include <cstdint>
#include <vector>

namespace normvol {

/// Limits and seed shared by every extremal solver. Identical budgets give
/// identical witnesses.
struct SolverBudget {
  /// Exhaustive enumeration is used while the number of candidate subsets
  /// stays at or below this cap.
  std::uint64_t max_subsets = 2'000'000;
  int restarts = 8;
  int max_iters = 10'000;
  std::uint64_t rng_seed = 0;

  /// Throws kInvalidArgument unless every limit is positive.
  void validate() const;
};

struct ExtremalWitness {
  Polytope object;
  double value = 0.0;
  /// True iff produced by exhaustive enumeration (or an exact 2D routine).
  bool exact = false;
  /// Vertex indices of the query body that the witness was built from; empty
  /// for circumscribed witnesses.
  std::vector<std::size_t> indices;
};

/// Thrown by iterative solvers that exhaust `max_iters`; carries the best
/// iterate reached.
class SolverStallError : public Error {
 public:
  SolverStallError(const std::string& what, Vector best)
      : Error(ErrorCode::kSolverStall, what), best_(std::move(best)) {}
  const Vector& best() const { return best_; }

 private:
  Vector best_;
};

/// Q_n(B): a largest-volume polytope with at most n vertices inside B. By the
/// vertex-restriction property only vertex subsets of B are searched.
/// Exhaustive (lexicographically smallest index set among ties) when
/// C(|V|, n) <= max_subsets, otherwise seeded swap local search.
ExtremalWitness max_inscribed_polytope(const Polytope& body, int n, const SolverBudget& budget);

/// Largest o-symmetric 2m-gon spanned by antipodal vertex pairs of a
/// symmetric polygon.
ExtremalWitness max_inscribed_polygon_symmetric(const Polytope& body, int two_m,
                                                const SolverBudget& budget);

/// Area of the largest n-gon in the unit disk, by cyclic coordinate ascent on
/// the boundary angles from seeded random starts.
double max_inscribed_ngon_disk(int n, const SolverBudget& budget = {});

/// I(B): largest cross-polytope conv{+-q_i} with q_i vertices of B.
ExtremalWitness max_cross_polytope(const Polytope& body, const SolverBudget& budget);

/// C(B): smallest parallelotope containing B. Exact in the plane (flush edge
/// candidates refined per normal-event interval), seeded frame descent in
/// higher dimensions.
ExtremalWitness min_circumscribed_parallelotope(const Polytope& body, const SolverBudget& budget);

/// Volume of (K - s)°, or +infinity when s is not interior to K.
double polar_volume_about(const Polytope& body, const Vector& s);

/// s(K): minimizer of vol((K - s)°) over int K. Returns o for symmetric K.
/// Throws SolverStallError after max_iters Newton steps.
Vector santalo_point(const Polytope& body, const SolverBudget& budget = {});

}  // namespace normvol
