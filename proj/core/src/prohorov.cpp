#include "weakhash/prohorov.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "weakhash/error.hpp"
#include "weakhash/max_flow.hpp"

namespace weakhash {

namespace {

std::vector<Mass> multiplicities(const CountingMeasure& mu) {
  std::vector<Mass> out;
  out.reserve(mu.size());
  for (const Atom& a : mu.atoms()) out.push_back(a.multiplicity);
  return out;
}

struct Arc {
  double length;
  std::size_t left;
  std::size_t right;
};

// Cross arcs sorted by length; ties keep (left, right) order.
std::vector<Arc> sorted_arcs(const CountingMeasure& mu, const CountingMeasure& nu) {
  std::vector<Arc> arcs;
  arcs.reserve(mu.size() * nu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t j = 0; j < nu.size(); ++j) {
      arcs.push_back({distance(mu.atoms()[i].point, nu.atoms()[j].point), i, j});
    }
  }
  std::stable_sort(arcs.begin(), arcs.end(),
                   [](const Arc& a, const Arc& b) { return a.length < b.length; });
  return arcs;
}

// Calls visit(t_k, G_k, t_{k+1}) for the threshold sweep described in the
// header, stopping early once visit returns false.
template <typename Visit>
void sweep_thresholds(const CountingMeasure& mu, const CountingMeasure& nu,
                      Visit visit) {
  const std::vector<Mass> left = multiplicities(mu);
  const std::vector<Mass> right = multiplicities(nu);
  const std::vector<Arc> arcs = sorted_arcs(mu, nu);
  BipartiteFlow flow(left, right);

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::size_t next = 0;
  double level = 0.0;
  while (true) {
    while (next < arcs.size() && arcs[next].length <= level) {
      flow.add_edge(arcs[next].left, arcs[next].right);
      ++next;
    }
    const Mass g = flow.solve();
    const double upper = next < arcs.size() ? arcs[next].length : kInf;
    if (!visit(level, g, upper) || next == arcs.size()) return;
    level = upper;
  }
}

void require_positive_eps(double eps) {
  if (!(eps > 0.0)) {
    throw InputError("epsilon must be > 0, got " + std::to_string(eps));
  }
}

}  // namespace

FlowInstance make_flow_instance(const CountingMeasure& mu,
                                const CountingMeasure& nu, double threshold) {
  require_same_context(mu, nu);
  FlowInstance inst;
  inst.left = multiplicities(mu);
  inst.right = multiplicities(nu);
  inst.threshold = threshold;
  inst.distances.reserve(mu.size() * nu.size());
  for (const Atom& a : mu.atoms()) {
    for (const Atom& b : nu.atoms()) {
      inst.distances.push_back(distance(a.point, b.point));
    }
  }
  return inst;
}

Mass max_flow(const FlowInstance& instance) {
  if (instance.distances.size() != instance.left.size() * instance.right.size()) {
    throw InputError("flow instance distance matrix has the wrong size");
  }
  BipartiteFlow flow(instance.left, instance.right);
  for (std::size_t i = 0; i < instance.left.size(); ++i) {
    for (std::size_t j = 0; j < instance.right.size(); ++j) {
      if (instance.distance(i, j) < instance.threshold) flow.add_edge(i, j);
    }
  }
  return flow.solve();
}

bool prohorov_feasible(const CountingMeasure& mu, const CountingMeasure& nu,
                       double eps) {
  require_positive_eps(eps);
  const Mass m = std::max(mu.total_mass(), nu.total_mass());
  const Mass g = max_flow(make_flow_instance(mu, nu, eps));
  return static_cast<double>(m - g) <= eps;
}

double prohorov_distance(const CountingMeasure& mu, const CountingMeasure& nu) {
  require_same_context(mu, nu);
  const Mass m = std::max(mu.total_mass(), nu.total_mass());
  if (m == 0) return 0.0;

  double best = std::numeric_limits<double>::infinity();
  sweep_thresholds(mu, nu, [&](double level, Mass g, double upper) {
    const double deficiency = static_cast<double>(m - g);
    if (deficiency <= upper) best = std::min(best, std::max(level, deficiency));
    // Every later interval starts at or above `upper`.
    return best > upper;
  });
  return best;
}

std::vector<double> candidate_set(const CountingMeasure& mu,
                                  const CountingMeasure& nu) {
  require_same_context(mu, nu);
  const Mass m = std::max(mu.total_mass(), nu.total_mass());
  std::vector<double> out{0.0};
  sweep_thresholds(mu, nu, [&](double level, Mass g, double) {
    out.push_back(level);
    out.push_back(static_cast<double>(m - g));
    return true;
  });
  for (const Atom& a : mu.atoms()) {
    for (const Atom& b : nu.atoms()) out.push_back(distance(a.point, b.point));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double prohorov_oracle(const CountingMeasure& mu, const CountingMeasure& nu) {
  require_same_context(mu, nu);
  if (mu.size() + nu.size() > kOracleMaxAtoms) {
    throw SizeError("oracle supports at most " + std::to_string(kOracleMaxAtoms) +
                    " atoms, got " + std::to_string(mu.size() + nu.size()));
  }
  const std::size_t n = mu.size();
  const std::size_t k = nu.size();
  std::vector<double> dist(n * k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      dist[i * k + j] = distance(mu.atoms()[i].point, nu.atoms()[j].point);
    }
  }

  // The infimum is either 0, a cross distance, or an integer mass deficiency
  // no larger than the bigger total mass.
  std::vector<double> candidates{0.0};
  candidates.insert(candidates.end(), dist.begin(), dist.end());
  const Mass m = std::max(mu.total_mass(), nu.total_mass());
  for (Mass v = 1; v <= m; ++v) candidates.push_back(static_cast<double>(v));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // Feasibility just above eps: arcs of length <= eps are present and every
  // subset S must satisfy mass(S) <= mass(neighbours of S) + eps.
  auto one_sided = [&](double eps, const CountingMeasure& from,
                       const CountingMeasure& to, bool from_is_left) {
    const std::size_t nf = from.size();
    const std::size_t nt = to.size();
    for (std::uint32_t s = 1; s < (1u << nf); ++s) {
      Mass mass_s = 0;
      for (std::size_t i = 0; i < nf; ++i) {
        if (s & (1u << i)) mass_s += from.atoms()[i].multiplicity;
      }
      Mass mass_nbhd = 0;
      for (std::size_t j = 0; j < nt; ++j) {
        for (std::size_t i = 0; i < nf; ++i) {
          if (!(s & (1u << i))) continue;
          const double d = from_is_left ? dist[i * k + j] : dist[j * k + i];
          if (d <= eps) {
            mass_nbhd += to.atoms()[j].multiplicity;
            break;
          }
        }
      }
      if (static_cast<double>(mass_s) > static_cast<double>(mass_nbhd) + eps) {
        return false;
      }
    }
    return true;
  };

  for (double eps : candidates) {
    if (one_sided(eps, mu, nu, true) && one_sided(eps, nu, mu, false)) return eps;
  }
  return candidates.back();  // unreachable: eps = m is always feasible
}

Mass restriction_distance_bound(const CountingMeasure& mu, double p, double r) {
  if (!(p >= 0.0) || !(p <= r)) {
    throw InputError("restriction bound requires 0 <= p <= r");
  }
  return ball_mass(mu, r) - ball_mass(mu, p);
}

bool atom_gap_lower_bound(const CountingMeasure& mu, const CountingMeasure& nu,
                          double r_lo, double r_hi, double eps) {
  require_same_context(mu, nu);
  if (!(r_lo > 0.0) || !(r_lo < r_hi)) {
    throw InputError("atom gap bound requires 0 < r_lo < r_hi");
  }
  const double half_width = (r_hi - r_lo) / 2.0;
  if (!(eps > 0.0) || !(eps < half_width) || !(half_width < 1.0)) {
    throw InputError("atom gap bound requires 0 < eps < (r_hi - r_lo)/2 < 1");
  }
  // B_a \ B_b for open balls is the shell b <= |x - x0| < a.
  auto shell_mass = [](const CountingMeasure& m, double inner, double outer) {
    Mass total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m.radius(i) >= inner && m.radius(i) < outer) {
        total += m.atoms()[i].multiplicity;
      }
    }
    return total;
  };
  return shell_mass(mu, r_lo, r_hi) == 0 &&
         shell_mass(nu, r_lo + eps, r_hi - eps) > 0;
}

Mass count_difference_bound(const CountingMeasure& mu, const CountingMeasure& nu,
                            double r) {
  const Mass a = ball_mass(mu, r);
  const Mass b = ball_mass(nu, r);
  return a > b ? a - b : b - a;
}

}  // namespace weakhash
