#include "weakhash/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <utility>

#include "weakhash/error.hpp"
#include "weakhash/format.hpp"
#include "weakhash/prohorov.hpp"
#include "weakhash/weakhash.hpp"

namespace weakhash {

namespace {

void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw InputError("tolerance must be > 0");
}

std::string point_label(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i) s += ',';
    s += format_real(p[i]);
  }
  return s + ")";
}

bool final_row_below(const ConvergenceVerdict& v, double tol) {
  const auto& last = v.trace.back();
  return std::all_of(last.begin(), last.end(), [tol](double x) { return x < tol; });
}

}  // namespace

MeasureSequence::MeasureSequence(std::vector<CountingMeasure> terms,
                                 CountingMeasure target)
    : terms_(std::move(terms)), target_(std::move(target)) {
  if (terms_.empty()) throw InputError("measure sequence is empty");
  for (const CountingMeasure& t : terms_) require_same_context(t, target_);
}

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::kWeakHash: return "weakhash";
    case Criterion::kIntegrals: return "integrals";
    case Criterion::kRestrictions: return "restrictions";
    case Criterion::kSets: return "sets";
  }
  return "?";
}

TestFunction::TestFunction(std::string name, Point center, double support_radius,
                           std::function<double(const Point&)> fn)
    : name_(std::move(name)),
      center_(std::move(center)),
      support_radius_(support_radius),
      fn_(std::move(fn)) {
  if (!std::isfinite(support_radius_) || !(support_radius_ > 0.0)) {
    throw InputError("test function '" + name_ +
                     "' must declare a finite positive support radius");
  }
  if (!fn_) throw InputError("test function '" + name_ + "' is empty");
}

TestFunction TestFunction::tent(Point center, double radius, double height) {
  std::string name = "tent" + point_label(center) + "/" + format_real(radius);
  Point c = center;
  return TestFunction(std::move(name), std::move(center), radius,
                      [c = std::move(c), radius, height](const Point& p) {
                        return height * std::max(0.0, 1.0 - distance(c, p) / radius);
                      });
}

TestFunction TestFunction::bump(Point center, double radius, double height) {
  std::string name = "bump" + point_label(center) + "/" + format_real(radius);
  Point c = center;
  return TestFunction(std::move(name), std::move(center), radius,
                      [c = std::move(c), radius, height](const Point& p) {
                        const double s = distance(c, p) / radius;
                        if (s >= 1.0) return 0.0;
                        return height * std::exp(1.0 - 1.0 / (1.0 - s * s));
                      });
}

ConvergenceVerdict check_criterion_weakhash(const MeasureSequence& seq, double tol) {
  require_tolerance(tol);
  ConvergenceVerdict v{Criterion::kWeakHash, false, {"d#"}, {}};
  for (const CountingMeasure& term : seq.terms()) {
    v.trace.push_back({weak_hash_distance(term, seq.target())});
  }
  const std::size_t n = v.trace.size();
  const std::size_t tail_start = n - std::max<std::size_t>(1, n / 4);
  bool settled = true;
  for (std::size_t k = tail_start + 1; k < n; ++k) {
    if (!(v.trace[k][0] < v.trace[k - 1][0] + tol)) settled = false;
  }
  v.converged = settled && v.trace.back()[0] < tol;
  return v;
}

ConvergenceVerdict check_criterion_integrals(const MeasureSequence& seq,
                                             std::span<const TestFunction> funcs,
                                             double tol) {
  require_tolerance(tol);
  ConvergenceVerdict v{Criterion::kIntegrals, false, {}, {}};
  std::vector<double> reference;
  for (const TestFunction& f : funcs) {
    v.columns.push_back(f.name());
    reference.push_back(integrate(seq.target(), f));
  }
  for (const CountingMeasure& term : seq.terms()) {
    std::vector<double> row;
    for (std::size_t j = 0; j < funcs.size(); ++j) {
      row.push_back(std::abs(integrate(term, funcs[j]) - reference[j]));
    }
    v.trace.push_back(std::move(row));
  }
  v.converged = final_row_below(v, tol);
  return v;
}

std::vector<double> select_continuity_radii(const CountingMeasure& mu,
                                            std::size_t count, double r_max) {
  if (count == 0) throw InputError("radius count must be >= 1");
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw InputError("r_max must be finite and > 0");
  }
  const double width = r_max / static_cast<double>(count);
  std::vector<double> radii;
  for (std::size_t n = 0; n < count; ++n) {
    const double lo = width * static_cast<double>(n);
    const double hi = n + 1 == count ? r_max : width * static_cast<double>(n + 1);
    std::vector<double> marks{lo, hi};
    for (double r : mu.radii()) {
      if (r > lo && r < hi) marks.push_back(r);
    }
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    double best_gap = -1.0;
    double mid = 0.0;
    for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
      const double candidate = marks[i] + (marks[i + 1] - marks[i]) / 2.0;
      if (marks[i + 1] - marks[i] > best_gap && candidate > marks[i] &&
          candidate < marks[i + 1]) {
        best_gap = marks[i + 1] - marks[i];
        mid = candidate;
      }
    }
    if (best_gap < 0.0) {
      throw InputError("no representable atom-free radius in cell " +
                       std::to_string(n));
    }
    radii.push_back(mid);
  }
  return radii;
}

ConvergenceVerdict check_criterion_restrictions(const MeasureSequence& seq,
                                                std::span<const double> radii,
                                                double tol) {
  require_tolerance(tol);
  if (radii.empty()) throw InputError("at least one radius is required");
  ConvergenceVerdict v{Criterion::kRestrictions, false, {}, {}};
  std::vector<CountingMeasure> reference;
  for (double r : radii) {
    if (!(r > 0.0) || boundary_mass(seq.target(), r) != 0) {
      throw InputError("radius " + format_real(r) +
                       " must be > 0 and carry no target mass on its sphere");
    }
    v.columns.push_back("r=" + format_real(r));
    reference.push_back(restriction(seq.target(), r));
  }
  for (const CountingMeasure& term : seq.terms()) {
    std::vector<double> row;
    for (std::size_t j = 0; j < radii.size(); ++j) {
      row.push_back(prohorov_distance(restriction(term, radii[j]), reference[j]));
    }
    v.trace.push_back(std::move(row));
  }
  v.converged = final_row_below(v, tol);
  return v;
}

ConvergenceVerdict check_criterion_sets(const MeasureSequence& seq,
                                        std::span<const PointSet> sets, double tol) {
  require_tolerance(tol);
  ConvergenceVerdict v{Criterion::kSets, false, {}, {}};
  std::vector<Mass> reference;
  for (const PointSet& a : sets) {
    if (!a.bounded()) throw InputError("set " + a.describe() + " is unbounded");
    for (const Atom& atom : seq.target().atoms()) {
      if (a.on_boundary(atom.point)) {
        throw InputError("set " + a.describe() +
                         " has a target atom on its boundary");
      }
    }
    v.columns.push_back(a.describe());
    reference.push_back(set_mass(seq.target(), a));
  }
  for (const CountingMeasure& term : seq.terms()) {
    std::vector<double> row;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      row.push_back(static_cast<double>(std::abs(set_mass(term, sets[j]) - reference[j])));
    }
    v.trace.push_back(std::move(row));
  }
  const auto& last = v.trace.back();
  v.converged = std::all_of(last.begin(), last.end(), [](double d) { return d == 0.0; });
  return v;
}

bool basis_neighborhood_contains(const CountingMeasure& xi, const NeighborhoodSpec& spec) {
  require_same_context(xi, spec.center);
  if (!(spec.epsilon > 0.0)) throw InputError("neighbourhood epsilon must be > 0");
  for (const PointSet& f : spec.closed_sets) {
    if (!f.bounded()) throw InputError("set " + f.describe() + " is unbounded");
  }
  for (double r : spec.radii) {
    if (!(r > 0.0) || boundary_mass(spec.center, r) != 0) {
      throw InputError("radius " + format_real(r) +
                       " must be > 0 and carry no centre mass on its sphere");
    }
  }
  const double eps = spec.epsilon;
  for (const PointSet& f : spec.closed_sets) {
    if (!(static_cast<double>(set_mass(xi, f)) <
          static_cast<double>(set_mass(spec.center, f)) + eps)) {
      return false;
    }
  }
  for (double r : spec.radii) {
    if (boundary_mass(xi, r) != 0) return false;
    const Mass diff = closed_ball_mass(xi, r) - closed_ball_mass(spec.center, r);
    if (!(static_cast<double>(std::abs(diff)) < eps)) return false;
  }
  return true;
}

void write_verdict_table(std::ostream& os, std::span<const ConvergenceVerdict> verdicts) {
  os << "term";
  for (const ConvergenceVerdict& v : verdicts) os << '\t' << criterion_name(v.criterion);
  os << '\n';
  const std::size_t n = verdicts.empty() ? 0 : verdicts.front().trace.size();
  for (std::size_t k = 0; k < n; ++k) {
    os << k + 1;
    for (const ConvergenceVerdict& v : verdicts) {
      const auto& row = v.trace.at(k);
      const double worst = row.empty() ? 0.0 : *std::max_element(row.begin(), row.end());
      os << '\t' << format_real(worst);
    }
    os << '\n';
  }
  os << "converged";
  for (const ConvergenceVerdict& v : verdicts) os << '\t' << (v.converged ? "true" : "false");
  os << '\n';
}

}  // namespace weakhash
