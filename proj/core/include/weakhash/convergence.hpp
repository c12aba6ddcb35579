#ifndef WEAKHASH_CONVERGENCE_HPP
#define WEAKHASH_CONVERGENCE_HPP

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weakhash/measure.hpp"
#include "weakhash/point_set.hpp"

namespace weakhash {

// Finite-sample diagnostics for the four equivalent characterisations of
// d#-convergence of counting measures:
//   (i)   d#(mu_k, mu) -> 0
//   (ii)  int f dmu_k -> int f dmu for bounded continuous f of bounded support
//   (iii) d(mu_k^(r_n), mu^(r_n)) -> 0 along radii with mu(dB_{r_n}) = 0
//   (iv)  mu_k(A) -> mu(A) for bounded A with mu(dA) = 0
// A finite sequence cannot prove a limit. Each checker looks at the last term
// (and, for (i), the tail trend) and records the per-term diagnostics.

/// Terms mu_1..mu_n and the candidate limit, all on one metric context.
class MeasureSequence {
 public:
  MeasureSequence(std::vector<CountingMeasure> terms, CountingMeasure target);

  [[nodiscard]] std::span<const CountingMeasure> terms() const noexcept { return terms_; }
  [[nodiscard]] const CountingMeasure& target() const noexcept { return target_; }
  [[nodiscard]] const CountingMeasure& last() const noexcept { return terms_.back(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

 private:
  std::vector<CountingMeasure> terms_;
  CountingMeasure target_;
};

enum class Criterion { kWeakHash, kIntegrals, kRestrictions, kSets };

[[nodiscard]] std::string_view criterion_name(Criterion c);

struct ConvergenceVerdict {
  Criterion criterion = Criterion::kWeakHash;
  bool converged = false;
  /// One label per diagnostic column (a test function, radius, or set).
  std::vector<std::string> columns;
  /// trace[k][j]: diagnostic j for term k; trace.size() == sequence size.
  std::vector<std::vector<double>> trace;
};

/// Bounded continuous test function with declared support inside the closed
/// ball of radius support_radius around center.
class TestFunction {
 public:
  TestFunction(std::string name, Point center, double support_radius,
               std::function<double(const Point&)> fn);

  /// height * max(0, 1 - |x - c| / radius).
  static TestFunction tent(Point center, double radius, double height = 1.0);
  /// height * exp(1 - 1 / (1 - s^2)) with s = |x - c| / radius, zero for s >= 1.
  static TestFunction bump(Point center, double radius, double height = 1.0);

  [[nodiscard]] double operator()(const Point& p) const { return fn_(p); }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const Point& center() const noexcept { return center_; }
  [[nodiscard]] double support_radius() const noexcept { return support_radius_; }

 private:
  std::string name_;
  Point center_;
  double support_radius_;
  std::function<double(const Point&)> fn_;
};

/// (i): converged iff d#(last, target) < tol and over the last quarter of the
/// sequence no term exceeds its predecessor by tol or more.
[[nodiscard]] ConvergenceVerdict check_criterion_weakhash(const MeasureSequence& seq,
                                                          double tol);

/// (ii): converged iff |int f d(last) - int f d(target)| < tol for every f.
[[nodiscard]] ConvergenceVerdict check_criterion_integrals(
    const MeasureSequence& seq, std::span<const TestFunction> funcs, double tol);

/// Strictly increasing radii avoiding every atom sphere of mu. The range
/// (0, r_max) is cut into `count` equal cells and each radius is the midpoint
/// of the widest atom-free gap in its cell.
[[nodiscard]] std::vector<double> select_continuity_radii(const CountingMeasure& mu,
                                                          std::size_t count,
                                                          double r_max);

/// (iii): converged iff d(last^(r), target^(r)) < tol for every radius.
/// Throws InputError if a radius carries target mass on its sphere.
[[nodiscard]] ConvergenceVerdict check_criterion_restrictions(
    const MeasureSequence& seq, std::span<const double> radii, double tol);

/// (iv): converged iff last(A) == target(A) for every set. Masses are integers,
/// so convergence means eventual equality and tol only has to be positive.
/// Throws InputError for unbounded sets or sets with a target atom on the
/// boundary.
[[nodiscard]] ConvergenceVerdict check_criterion_sets(const MeasureSequence& seq,
                                                      std::span<const PointSet> sets,
                                                      double tol);

/// Data of a basic open set of the d#-topology around `center`.
struct NeighborhoodSpec {
  CountingMeasure center;
  double epsilon = 0.0;
  std::vector<PointSet> closed_sets;
  std::vector<double> radii;
};

/// xi(F_i) < mu(F_i) + eps for all i, and for all j
/// |xi(closed B_{r_j}) - mu(closed B_{r_j})| < eps and xi(dB_{r_j}) = 0.
[[nodiscard]] bool basis_neighborhood_contains(const CountingMeasure& xi,
                                               const NeighborhoodSpec& spec);

/// Row per term, one column per verdict holding the largest diagnostic of
/// that term, then a final `converged` row.
void write_verdict_table(std::ostream& os, std::span<const ConvergenceVerdict> verdicts);

}  // namespace weakhash

#endif  // WEAKHASH_CONVERGENCE_HPP
