#include "weakhash/weakhash.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "weakhash/error.hpp"
#include "weakhash/format.hpp"
#include "weakhash/prohorov.hpp"

namespace weakhash {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double transformed(double c) { return c / (1.0 + c); }

void require_positive_window(double R) {
  if (!(R > 0.0)) {
    throw InputError("window radius must be > 0, got " + std::to_string(R));
  }
}

// sum_k c_k/(1+c_k) * (e^{-a_k} - e^{-b_k}) over the profile intervals
// clipped to [0, R], ascending.
double integrate_profile(const StepProfile& profile, double R) {
  double sum = 0.0;
  double lo = 0.0;
  for (std::size_t k = 0; k < profile.values.size(); ++k) {
    if (lo >= R) break;
    const double hi =
        std::min(k < profile.breakpoints.size() ? profile.breakpoints[k] : kInf, R);
    const double weight = std::exp(-lo) - (hi == kInf ? 0.0 : std::exp(-hi));
    sum += transformed(profile.values[k]) * weight;
    lo = hi;
  }
  return sum;
}

}  // namespace

double StepProfile::value_at(double r) const {
  if (!(r > 0.0)) {
    throw InputError("profile is defined for r > 0 only");
  }
  const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), r);
  return values[static_cast<std::size_t>(it - breakpoints.begin())];
}

std::vector<double> profile_breakpoints(const CountingMeasure& mu,
                                        const CountingMeasure& nu) {
  require_same_context(mu, nu);
  std::vector<double> out;
  for (const CountingMeasure* m : {&mu, &nu}) {
    for (double r : m->radii()) {
      if (r > 0.0) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StepProfile prohorov_profile(const CountingMeasure& mu, const CountingMeasure& nu) {
  const std::vector<double> rho = profile_breakpoints(mu, nu);
  StepProfile profile;
  // On (rho_{k-1}, rho_k] the restriction holds exactly the atoms with
  // radius <= rho_{k-1}.
  double reach = 0.0;
  for (std::size_t k = 0; k <= rho.size(); ++k) {
    auto inside = [reach](double rad) { return rad <= reach; };
    const double c =
        prohorov_distance(mu.filter_by_radius(inside), nu.filter_by_radius(inside));
    if (k == 0 || c != profile.values.back()) {
      if (k > 0) profile.breakpoints.push_back(rho[k - 1]);
      profile.values.push_back(c);
    }
    if (k < rho.size()) reach = rho[k];
  }
  return profile;
}

double weak_hash_distance(const StepProfile& profile) {
  return integrate_profile(profile, kInf);
}

double weak_hash_distance(const CountingMeasure& mu, const CountingMeasure& nu) {
  return weak_hash_distance(prohorov_profile(mu, nu));
}

double truncated_weak_hash(const StepProfile& profile, double R) {
  require_positive_window(R);
  return integrate_profile(profile, R);
}

double truncated_weak_hash(const CountingMeasure& mu, const CountingMeasure& nu,
                           double R) {
  require_positive_window(R);
  return integrate_profile(prohorov_profile(mu, nu), R);
}

double profile_total_variation(const StepProfile& profile, double R) {
  require_positive_window(R);
  double variation = 0.0;
  for (std::size_t k = 0; k < profile.breakpoints.size(); ++k) {
    if (!(profile.breakpoints[k] < R)) break;
    variation += std::abs(profile.values[k + 1] - profile.values[k]);
  }
  return variation;
}

double profile_total_variation(const CountingMeasure& mu, const CountingMeasure& nu,
                               double R) {
  require_positive_window(R);
  return profile_total_variation(prohorov_profile(mu, nu), R);
}

void write_profile_csv(std::ostream& os, const StepProfile& profile) {
  os << "r_lo,r_hi,prohorov,transformed\n";
  double lo = 0.0;
  for (std::size_t k = 0; k < profile.values.size(); ++k) {
    const double hi = k < profile.breakpoints.size() ? profile.breakpoints[k] : kInf;
    const double c = profile.values[k];
    os << format_real(lo) << ',' << format_real(hi) << ',' << format_real(c) << ','
       << format_real(transformed(c)) << '\n';
    lo = hi;
  }
}

}  // namespace weakhash
