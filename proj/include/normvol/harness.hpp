#pragma once

#include "normvol/geometry.hpp"
#include "normvol/rng.hpp"
#include "normvol/shadow.hpp"
#include "normvol/solvers.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace normvol {

enum class Relation { kEqual, kAtLeast, kAtMost };

const char* to_string(Relation r);

/// One checked claim. For kEqual, rel_err = |computed - expected| /
/// max(|expected|, 1); for the one-sided relations only a violation counts.
/// pass iff rel_err <= tol.
struct VerificationReport {
  std::string claim_id;
  double computed = 0.0;
  double expected = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  Relation relation = Relation::kEqual;
  std::optional<std::string> witness_path;
  std::string note;
};

VerificationReport make_report(std::string claim_id, double computed, double expected, double tol,
                               Relation relation = Relation::kEqual, std::string note = {});

struct ADTable {
  int d = 0;
  /// values[k-1] = C(k, floor(k/2)) * C(d-k, floor((d-k)/2)) for 1 <= k <= d/2.
  std::vector<unsigned long long> values;
  std::vector<int> argmin;
  unsigned long long min = 0;
  /// The minimizers and minimum predicted by the residue of d mod 4.
  std::vector<int> predicted_argmin;
  unsigned long long predicted_min = 0;
  bool matches = false;
};

/// Exact integer table of A_d(k); throws kInvalidArgument for d < 3 or
/// d > 60.
ADTable a_d_table(int d);

/// Dimension k* = 2m+1 (d = 4m + r) of the first simplex in the extremal
/// d+2 vertex body, and the closed-form denominator of M^Bus(d+2, d).
int extremal_pair_dimension(int d);
unsigned long long bus_pair_denominator(int d);

/// Same body with each antipodal vertex pair moved by a Gaussian offset of
/// size `scale * body.scale()`, keeping o-symmetry.
Polytope perturb_symmetric(const Polytope& body, CounterRng& rng, double scale);

struct RandomTriangle {
  Polytope triangle;
  /// Barycentric coordinates of o with respect to the generated vertices.
  std::array<double, 3> weights;
};

/// Random triangle translated so that o sits at random barycentric
/// coordinates. With `medial` every weight is at most 1/2, i.e. o lies in the
/// midpoint triangle, which is exactly when conv(T u -T) is a hexagon with
/// area 2 lambda(T).
RandomTriangle random_triangle_about_origin(CounterRng& rng, bool medial);

/// Random shadow system: `points` Gaussian base points, Gaussian speeds, unit
/// random direction.
ShadowSystem random_shadow_system(CounterRng& rng, int d, int points);

std::vector<VerificationReport> verify_bus_max(int d, const SolverBudget& budget, double tol = 1e-6,
                                               int trials = 20);
std::vector<VerificationReport> verify_bus_plane(const SolverBudget& budget, double tol = 1e-6,
                                                 int triangles = 50);
std::vector<VerificationReport> verify_macbeath(const SolverBudget& budget, double tol = 1e-6, int samples = 50);
std::vector<VerificationReport> verify_ht_plane(const std::vector<int>& n_list, const SolverBudget& budget,
                                                double tol = 1e-6, int samples = 100);
std::vector<VerificationReport> verify_mass(const SolverBudget& budget, double tol = 1e-6, int samples = 100);
std::vector<VerificationReport> verify_mass_star(const SolverBudget& budget, double tol = 1e-6,
                                                 int samples = 100);
std::vector<VerificationReport> verify_ht_simplex_local(int d, int trials, const SolverBudget& budget,
                                                        double perturbation = 0.05);
std::vector<VerificationReport> verify_combinatorics(int d_max = 40);
std::vector<VerificationReport> verify_shadow(const SolverBudget& budget, double tol = 1e-6);

/// Brute-force mu_n^mass of the regular n'-gon, n' the largest integer <= n
/// with n' = 2 mod 4.
double m_plane_max_mass_oracle(int n_even, const SolverBudget& budget = {});

/// Runs a named suite: bus-max, bus-plane, macbeath, ht-plane, mass,
/// mass-star, ht-simplex, combinatorics, shadow, or all.
std::vector<VerificationReport> run_suite(const std::string& name, double tol, const SolverBudget& budget);

const std::vector<std::string>& suite_names();

struct SearchParams {
  int k_min = 3;
  int k_max = 8;
};

struct SearchRecord {
  std::uint64_t sample_id = 0;
  std::uint64_t seed = 0;
  int k_dirs = 0;
  double area_q6 = 0.0;
  double area_polar = 0.0;
  double product = 0.0;
  double margin = 0.0;
  std::string body_hash;
};

struct SearchSummary {
  SearchRecord control;
  std::optional<SearchRecord> min;
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;
  /// Samples whose product falls below 8 by more than 1e-6.
  std::vector<SearchRecord> counterexamples;
  std::vector<Polytope> counterexample_bodies;
};

/// Evaluates lambda(Q_6(B)) * lambda(B°) on a parallelogram control
/// (sample 0) and `samples` seeded random symmetric polygons (samples
/// 1..N). Every record is passed to `sink` in sample order.
SearchSummary conjecture_search(std::uint64_t samples, std::uint64_t seed, const SearchParams& params,
                                const std::function<void(const SearchRecord&)>& sink,
                                const SolverBudget& budget = {});

}  // namespace normvol
