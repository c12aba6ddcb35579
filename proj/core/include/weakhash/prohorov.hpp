#ifndef WEAKHASH_PROHOROV_HPP
#define WEAKHASH_PROHOROV_HPP

#include <cstddef>
#include <vector>

#include "weakhash/measure.hpp"

namespace weakhash {

/// Transport network for one Prohorov feasibility question: left nodes carry
/// the multiplicities of mu, right nodes those of nu, and (i, j) is an arc iff
/// distance(u_i, v_j) < threshold. Strictness mirrors the open neighbourhood
/// A^eps = union of open eps-balls.
struct FlowInstance {
  std::vector<Mass> left;
  std::vector<Mass> right;
  std::vector<double> distances;  // row-major, left.size() x right.size()
  double threshold = 0.0;

  [[nodiscard]] double distance(std::size_t i, std::size_t j) const {
    return distances[i * right.size() + j];
  }
};

[[nodiscard]] FlowInstance make_flow_instance(const CountingMeasure& mu,
                                              const CountingMeasure& nu,
                                              double threshold);

/// Maximum flow through the threshold-gated network.
[[nodiscard]] Mass max_flow(const FlowInstance& instance);

/// True iff mu(A) <= nu(A^eps) + eps and nu(A) <= mu(A^eps) + eps for every
/// closed A. For atomic measures the worst A is a set of atoms, and by
/// max-flow/min-cut max_S [mu(S) - nu(S^eps)] = mu(X) - maxflow, so the test
/// is max(mu(X), nu(X)) - maxflow(eps) <= eps. Requires eps > 0.
[[nodiscard]] bool prohorov_feasible(const CountingMeasure& mu,
                                     const CountingMeasure& nu, double eps);

/// Exact Prohorov distance (an infimum, possibly not attained).
///
/// Let 0 = t_0 < t_1 < ... be the distinct cross distances and G_k the max
/// flow using arcs of length <= t_k. For eps in (t_k, t_{k+1}] the arc set is
/// fixed, so eps is feasible iff eps >= m - G_k with m = max(mu(X), nu(X)).
/// The distance is the smallest max(t_k, m - G_k) over intervals where that
/// value does not exceed t_{k+1}.
[[nodiscard]] double prohorov_distance(const CountingMeasure& mu,
                                       const CountingMeasure& nu);

/// Sorted distinct values {0} u {cross distances} u {m - G_k}. The distance
/// returned by prohorov_distance is always a member.
[[nodiscard]] std::vector<double> candidate_set(const CountingMeasure& mu,
                                                const CountingMeasure& nu);

inline constexpr std::size_t kOracleMaxAtoms = 12;

/// Brute-force Prohorov distance by enumerating every subset of atoms of each
/// measure. Shares no code with the flow route. Throws SizeError when the two
/// measures have more than kOracleMaxAtoms atoms combined.
[[nodiscard]] double prohorov_oracle(const CountingMeasure& mu,
                                     const CountingMeasure& nu);

// Bounds on restricted distances. Each returns the quantity on the
// right-hand side of the corresponding inequality so callers can assert it.

/// mu(B_r \ B_p), an upper bound for d(mu^(p), mu^(r)). Requires 0 <= p <= r.
[[nodiscard]] Mass restriction_distance_bound(const CountingMeasure& mu,
                                              double p, double r);

/// True iff mu has no mass in B_{r_hi} \ B_{r_lo} while nu has an atom in
/// B_{r_hi - eps} \ B_{r_lo + eps}; in that case d(mu, nu) >= eps.
/// Requires 0 < r_lo < r_hi and eps < (r_hi - r_lo) / 2 < 1.
[[nodiscard]] bool atom_gap_lower_bound(const CountingMeasure& mu,
                                        const CountingMeasure& nu, double r_lo,
                                        double r_hi, double eps);

/// |mu(B_r) - nu(B_r)|, a lower bound for d(mu^(r), nu^(r)).
[[nodiscard]] Mass count_difference_bound(const CountingMeasure& mu,
                                          const CountingMeasure& nu, double r);

}  // namespace weakhash

#endif  // WEAKHASH_PROHOROV_HPP
