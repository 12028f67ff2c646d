// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Expected values are closed forms or independent enumerations from
// oracles.hpp; the library is only asked for the quantity under test.

#include "normvol/bodies.hpp"
#include "normvol/harness.hpp"
#include "normvol/normed_volume.hpp"
#include "normvol/shadow.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

using namespace normvol;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double computed, double expected) {
  return std::abs(computed - expected) / std::max(std::abs(expected), 1.0);
}

// Collects the sub-checks of one criterion and remembers the worst offender.
class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void equal(const std::string& what, double computed, double expected, double tol) {
    record(what, rel(computed, expected), tol);
  }
  void at_least(const std::string& what, double computed, double bound) {
    record(what, computed >= bound ? 0.0 : bound - computed, 0.0);
  }
  void at_most(const std::string& what, double computed, double bound) {
    record(what, computed <= bound ? 0.0 : computed - bound, 0.0);
  }
  void holds(const std::string& what, bool ok) { record(what, ok ? 0.0 : 1.0, 0.0); }

  bool report() const {
    std::printf("%s  %2d  %-34s checks=%-4d worst=%.3g%s%s\n", failed_ ? "FAIL" : "PASS", number_, title_.c_str(),
                checks_, worst_, failed_ ? "  first failure: " : "", first_failure_.c_str());
    return !failed_;
  }

 private:
  void record(const std::string& what, double err, double tol) {
    ++checks_;
    worst_ = std::max(worst_, err);
    if (!(err <= tol) && !failed_) {
      failed_ = true;
      char buf[64];
      std::snprintf(buf, sizeof buf, " (err %.3g > tol %.3g)", err, tol);
      first_failure_ = what + buf;
    }
  }

  int number_;
  std::string title_;
  int checks_ = 0;
  double worst_ = 0.0;
  bool failed_ = false;
  std::string first_failure_;
};

const SolverBudget kBudget;

bool busemann_maxima() {
  Criterion c(1, "Busemann maxima");
  const auto a = mu(simplex_symmetral(3), 4, VolumeKind::kBusemann, kBudget);
  c.equal("mu4 symmetral(3)", a.value, oracle::ball_volume(3) / 3.0, 1e-6);
  c.holds("mu4 exhaustive", a.exact);
  const auto b = mu(simplex_pair_body(3, extremal_pair_dimension(3)), 5, VolumeKind::kBusemann, kBudget);
  c.equal("mu5 pair(3)", b.value, oracle::ball_volume(3) / 2.0, 1e-6);
  c.holds("mu5 exhaustive", b.exact);
  const auto e = mu(simplex_pair_body(4, extremal_pair_dimension(4)), 6, VolumeKind::kBusemann, kBudget);
  c.equal("mu6 pair(4)", e.value, oracle::ball_volume(4) / 3.0, 1e-6);
  c.holds("mu6 exhaustive", e.exact);
  return c.report();
}

bool busemann_planar() {
  Criterion c(2, "Busemann planar");
  c.equal("mu3 hexagon", mu(regular_ngon(6), 3, VolumeKind::kBusemann, kBudget).value, kPi / 2.0, 1e-9);
  // The doubling identity holds exactly when o lies in the medial triangle
  // of T; the triangles are drawn there.
  CounterRng rng(2024, 2);
  for (int i = 0; i < 50; ++i) {
    const auto t = random_triangle_about_origin(rng, true);
    std::vector<Vector> pts = t.triangle.vertices();
    for (const auto& v : t.triangle.vertices()) pts.push_back(-v);
    c.equal("triangle " + std::to_string(i), oracle::hull_area(pts), 2.0 * oracle::polygon_area(t.triangle.vertices()),
            1e-9);
  }
  return c.report();
}

bool holmes_thompson_planar() {
  Criterion c(3, "Holmes-Thompson planar");
  for (int n : {4, 6, 8}) {
    const double s = std::sin(kPi / n);
    c.equal("regular " + std::to_string(n) + "-gon",
            mu(regular_ngon(n), n, VolumeKind::kHolmesThompson, kBudget).value, n * n / kPi * s * s, 1e-9);
  }
  c.equal("mu4 hexagon", mu(regular_ngon(6), 4, VolumeKind::kHolmesThompson, kBudget).value, 6.0 / kPi, 1e-9);
  CounterRng rng(2024, 3);
  for (int i = 0; i < 100; ++i)
    c.at_least("random " + std::to_string(i),
               mu(random_symmetric_polygon(rng).body, 4, VolumeKind::kHolmesThompson, kBudget).value,
               6.0 / kPi - 1e-6);
  return c.report();
}

bool gromov_mass() {
  Criterion c(4, "Gromov mass");
  CounterRng rng(2024, 4);
  for (int i = 0; i < 100; ++i)
    c.equal("random " + std::to_string(i), mu(random_symmetric_polygon(rng).body, 4, VolumeKind::kMass, kBudget).value,
            2.0, 1e-7);
  const auto x3 = cross_polytope(3);
  c.equal("cross3 n=6", mu(x3, 6, VolumeKind::kMass, kBudget).value, 4.0 / 3.0, 1e-9);
  c.equal("cross3 n=5", mu(x3, 5, VolumeKind::kMass, kBudget).value, 2.0 / 3.0, 1e-9);
  c.equal("cross3 n=4", mu(x3, 4, VolumeKind::kMass, kBudget).value, 1.0 / 3.0, 1e-9);
  c.equal("square n=3", mu(cube(2), 3, VolumeKind::kMass, kBudget).value, 1.0, 1e-9);
  return c.report();
}

bool gromov_mass_star() {
  Criterion c(5, "Gromov mass*");
  c.equal("square n=3", mu(cube(2), 3, VolumeKind::kMassStar, kBudget).value, 2.0, 1e-9);
  c.equal("square n=4", mu(cube(2), 4, VolumeKind::kMassStar, kBudget).value, 4.0, 1e-9);
  c.equal("radon hexagon n=4", mu(radon_hexagon(), 4, VolumeKind::kMassStar, kBudget).value, 2.0, 1e-9);
  c.equal("cube3 n=8", mu(cube(3), 8, VolumeKind::kMassStar, kBudget).value, 8.0, 1e-9);
  CounterRng rng(2024, 5);
  for (int i = 0; i < 100; ++i) {
    const double v = mu(random_symmetric_polygon(rng).body, 4, VolumeKind::kMassStar, kBudget).value;
    c.at_least("random lower " + std::to_string(i), v, 2.0 - 1e-6);
    c.at_most("random upper " + std::to_string(i), v, 4.0 + 1e-9);
  }
  return c.report();
}

bool combinatorics() {
  Criterion c(6, "A_d argmin case analysis");
  for (int d = 3; d <= 40; ++d) {
    const int m = d / 4, r = d % 4;
    std::vector<int> predicted;
    if (r == 0) predicted = {2 * m - 1};
    else if (r == 1) predicted = {2 * m - 1, 2 * m};
    else predicted = {2 * m + 1};
    // Enumerate A_d(k) = C(k, k/2) C(d-k, (d-k)/2) over 1 <= k <= d/2.
    unsigned long long best = std::numeric_limits<unsigned long long>::max();
    std::vector<int> arg;
    for (int k = 1; k <= d / 2; ++k) {
      const unsigned long long v = oracle::choose(k, k / 2) * oracle::choose(d - k, (d - k) / 2);
      if (v < best) {
        best = v;
        arg = {k};
      } else if (v == best) {
        arg.push_back(k);
      }
    }
    const auto t = a_d_table(d);
    const std::string tag = "d=" + std::to_string(d);
    c.holds(tag + " enumeration vs case analysis", arg == predicted);
    c.holds(tag + " library argmin", t.argmin == arg);
    c.holds(tag + " library min", t.min == best);
  }
  return c.report();
}

bool shadow_systems() {
  Criterion c(7, "Shadow systems");
  CounterRng rng(2024, 7);
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + i % 2;
    const auto r = volume_profile(random_shadow_system(rng, d, d + 2 + i % 5), -1.0, 1.0, 201, 1e-8);
    c.holds("volume profile " + std::to_string(i), r.pass);
  }
  for (int i = 0; i < 20; ++i) {
    const auto r = mr_profile(random_shadow_system(rng, 2, 4 + i % 5), -1.0, 1.0, 201, 1e-6, kBudget);
    c.holds("reciprocal polar profile " + std::to_string(i), r.pass);
  }
  // vol(conv((S + t u) u -(S + t u))) for the regular simplex S in R^3.
  for (int i = 0; i < 5; ++i) {
    const Polytope s = regular_simplex(3);
    ShadowSystem sys;
    for (const auto& v : s.vertices()) {
      sys.base.push_back(v);
      sys.speeds.push_back(1.0);
      sys.base.push_back(-v);
      sys.speeds.push_back(-1.0);
    }
    Vector u(3);
    u << rng.normal(), rng.normal(), rng.normal();
    sys.direction = u.normalized();
    const auto r = volume_profile(sys, -1.0, 1.0, 201, 1e-8);
    const auto it = std::min_element(r.values.begin(), r.values.end());
    c.holds("symmetral family argmin at t=0 (" + std::to_string(i) + ")",
            r.values[r.values.size() / 2] <= *it * (1.0 + 1e-12));
  }
  return c.report();
}

bool projection_cascades() {
  Criterion c(8, "Projection cascade");
  CounterRng rng(2024, 8);
  auto gaussian = [&](int d) {
    Vector v(d);
    for (int j = 0; j < d; ++j) v[j] = rng.normal();
    return v;
  };
  for (int i = 0; i < 20; ++i) {
    const int d = 2 + i % 2;
    std::vector<Vector> normals, pts;
    for (int h = 0; h < d + 1; ++h) normals.push_back(gaussian(d));
    for (int p = 0; p < 5; ++p) pts.push_back(gaussian(d));
    double f0 = 0.0;
    for (const auto& p : pts) f0 += p.norm();
    const auto r = projection_cascade(normals, pts, 1e-6 * f0, 10'000);
    const std::string tag = "instance " + std::to_string(i);
    bool monotone = true;
    for (std::size_t s = 1; s < r.trace.size(); ++s) monotone = monotone && r.trace[s] < r.trace[s - 1];
    c.holds(tag + " monotone", monotone);
    c.at_most(tag + " final f / f0", r.trace.back() / f0, 1e-6);
    c.holds(tag + " within 1e4 steps", r.chosen.size() <= 10'000);
    // Independent recomputation of the final f.
    double f = 0.0;
    for (const auto& p : r.points) f += p.norm();
    c.equal(tag + " trace matches points", f, r.trace.back(), 1e-12);
  }
  return c.report();
}

bool macbeath_floor() {
  Criterion c(9, "Macbeath/Sas floor");
  for (int n = 3; n <= 8; ++n)
    c.equal("disk n=" + std::to_string(n), max_inscribed_ngon_disk(n, kBudget), oracle::ngon_area(n), 1e-8);
  CounterRng rng(2024, 9);
  for (int i = 0; i < 50; ++i) {
    const auto body = random_symmetric_polygon(rng).body;
    for (int n = 4; n <= 6; ++n)
      c.at_least("random " + std::to_string(i) + " n=" + std::to_string(n),
                 oracle::max_subset_area(body.vertices(), n), oracle::ngon_area(n) - 1e-6);
    for (int n = 4; n <= 6; ++n)
      c.equal("solver vs enumeration", max_inscribed_polytope(body, n, kBudget).value,
              oracle::max_subset_area(body.vertices(), n), 1e-12);
  }
  return c.report();
}

bool conjecture_search_gate() {
  Criterion c(10, "Volume product search");
  std::uint64_t flagged = 0;
  double min_product = std::numeric_limits<double>::infinity();
  bool all_flagged = true;
  const auto summary = conjecture_search(10'000, 20240601, {}, [&](const SearchRecord& r) {
    if (r.sample_id == 0) return;
    min_product = std::min(min_product, r.product);
    if (r.margin < -1e-6) ++flagged;
  });
  // Independent control: the square has area 4, Q_6 = square, polar area 2.
  c.equal("control product", summary.control.product, 4.0 * 2.0, 1e-9);
  all_flagged = summary.counterexamples.size() == flagged;
  c.holds("every violation flagged", all_flagged);
  c.holds("10^4 samples evaluated", summary.evaluated + summary.skipped == 10'000);
  const bool ok = c.report();
  std::printf("      min product over samples: %.15g, flagged counterexamples: %llu\n", min_product,
              static_cast<unsigned long long>(flagged));
  return ok;
}

bool regression_substitutes() {
  Criterion c(11, "Perturbation and pinned constants");
  const Polytope s = simplex_symmetral(3);
  const double ref = mu(s, 4, VolumeKind::kHolmesThompson, kBudget).value;
  c.equal("HT reference d=3", ref, 8.0 / (3.0 * kPi), 1e-9);
  CounterRng rng(2024, 11);
  for (int i = 0; i < 50; ++i)
    c.at_most("perturbation " + std::to_string(i),
              mu(perturb_symmetric(s, rng, 0.05), 4, VolumeKind::kHolmesThompson, kBudget).value, ref + 1e-4);
  // Largest 6-, 8- and 10-vertex mass in the regular 6-, 6- and 10-gon.
  c.equal("mass n=6", mu(regular_ngon(6), 6, VolumeKind::kMass, kBudget).value, 3.0, 1e-9);
  c.equal("mass n=8", mu(regular_ngon(6), 8, VolumeKind::kMass, kBudget).value, 3.0, 1e-9);
  c.equal("mass n=10", mu(regular_ngon(10), 10, VolumeKind::kMass, kBudget).value, 3.0901699437494745, 1e-9);
  c.equal("mass n=10 closed form", 3.0901699437494745, 5.0 * (std::sqrt(5.0) - 1.0) / 2.0, 1e-15);
  return c.report();
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria = {
      busemann_maxima, busemann_planar, holmes_thompson_planar, gromov_mass,      gromov_mass_star, combinatorics,
      shadow_systems,  projection_cascades, macbeath_floor,     conjecture_search_gate, regression_substitutes};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i]();
    } catch (const std::exception& e) {
      std::printf("FAIL  %2zu  threw: %s\n", i + 1, e.what());
    }
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
