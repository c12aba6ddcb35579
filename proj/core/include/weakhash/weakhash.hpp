#ifndef WEAKHASH_WEAKHASH_HPP
#define WEAKHASH_WEAKHASH_HPP

#include <iosfwd>
#include <vector>

#include "weakhash/measure.hpp"

namespace weakhash {

/// Piecewise-constant function r -> d(mu^(r), nu^(r)) on r > 0.
///
/// values[k] is the constant value on (breakpoints[k-1], breakpoints[k]],
/// taking breakpoints[-1] = 0 and breakpoints[K] = infinity, so
/// values.size() == breakpoints.size() + 1. Intervals are closed on the right
/// because the restriction uses open balls: at r = rho an atom at radius rho
/// is not yet included.
struct StepProfile {
  std::vector<double> breakpoints;
  std::vector<double> values;

  /// Profile value at r. Requires r > 0.
  [[nodiscard]] double value_at(double r) const;

  friend bool operator==(const StepProfile&, const StepProfile&) = default;
};

/// Distinct positive atom-to-origin distances of mu and nu, ascending.
/// Atoms at the origin contribute nothing: they belong to every B_r, r > 0.
[[nodiscard]] std::vector<double> profile_breakpoints(const CountingMeasure& mu,
                                                      const CountingMeasure& nu);

/// One Prohorov solve per interval; adjacent equal values are merged.
[[nodiscard]] StepProfile prohorov_profile(const CountingMeasure& mu,
                                           const CountingMeasure& nu);

/// d#(mu, nu) = int_0^inf e^{-r} f(r) / (1 + f(r)) dr with f the Prohorov
/// profile, summed exactly interval by interval. Result lies in [0, 1).
[[nodiscard]] double weak_hash_distance(const CountingMeasure& mu,
                                        const CountingMeasure& nu);
[[nodiscard]] double weak_hash_distance(const StepProfile& profile);

/// Same integral over [0, R]. Requires R > 0.
[[nodiscard]] double truncated_weak_hash(const CountingMeasure& mu,
                                         const CountingMeasure& nu, double R);
[[nodiscard]] double truncated_weak_hash(const StepProfile& profile, double R);

/// Total variation of the profile over (0, R]: the sum of jumps at
/// breakpoints strictly below R. Requires R > 0.
[[nodiscard]] double profile_total_variation(const CountingMeasure& mu,
                                             const CountingMeasure& nu, double R);
[[nodiscard]] double profile_total_variation(const StepProfile& profile, double R);

/// CSV with header r_lo,r_hi,prohorov,transformed; the last row has
/// r_hi = inf.
void write_profile_csv(std::ostream& os, const StepProfile& profile);

}  // namespace weakhash

#endif  // WEAKHASH_WEAKHASH_HPP
