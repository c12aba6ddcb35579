#ifndef WEAKHASH_TESTS_FIXTURES_HPP
#define WEAKHASH_TESTS_FIXTURES_HPP

// Fixed convergence scenarios on the real line (origin 0), k = 1..n.

#include <vector>

#include "support/test_support.hpp"
#include "weakhash/convergence.hpp"

namespace weakhash::testing {

/// delta_{0.5 + 1/k} -> delta_{0.5}.
inline MeasureSequence jitter_sequence(int n = 100) {
  std::vector<CountingMeasure> terms;
  for (int k = 1; k <= n; ++k) terms.push_back(dirac(line(), {0.5 + 1.0 / k}));
  return MeasureSequence(std::move(terms), dirac(line(), {0.5}));
}

/// delta_k escapes to infinity; candidate limit delta_0.
inline MeasureSequence mass_escape_sequence(int n = 100) {
  std::vector<CountingMeasure> terms;
  for (int k = 1; k <= n; ++k) terms.push_back(dirac(line(), {static_cast<double>(k)}));
  return MeasureSequence(std::move(terms), dirac(line(), {0.0}));
}

/// delta_{0.3} + delta_{0.5 + 1/k}: converges to 2 atoms, not to delta_{0.5}.
inline MeasureSequence extra_atom_sequence(int n = 100) {
  std::vector<CountingMeasure> terms;
  for (int k = 1; k <= n; ++k) {
    terms.push_back(CountingMeasure(line(), {{Point{0.3}, 1}, {Point{0.5 + 1.0 / k}, 1}}));
  }
  return MeasureSequence(std::move(terms), dirac(line(), {0.5}));
}

/// Fixed diagnostics applied identically to every scenario.
struct CriteriaBattery {
  double tol = 0.05;
  std::vector<TestFunction> funcs{
      TestFunction::tent(Point{0.0}, 0.5), TestFunction::tent(Point{0.3}, 0.5),
      TestFunction::tent(Point{0.5}, 0.5), TestFunction::bump(Point{1.0}, 1.0)};
  std::vector<double> radii{0.9, 1.9};
  std::vector<PointSet> sets{PointSet::closed_ball(Point{0.0}, 0.7),
                             PointSet::closed_ball(Point{0.0}, 1.0),
                             PointSet::box(Point{0.2}, Point{0.4})};

  [[nodiscard]] std::vector<ConvergenceVerdict> run(const MeasureSequence& seq) const {
    return {check_criterion_weakhash(seq, tol), check_criterion_integrals(seq, funcs, tol),
            check_criterion_restrictions(seq, radii, tol),
            check_criterion_sets(seq, sets, tol)};
  }
};

}  // namespace weakhash::testing

#endif  // WEAKHASH_TESTS_FIXTURES_HPP
