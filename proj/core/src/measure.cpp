#include "weakhash/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "weakhash/error.hpp"

namespace weakhash {

namespace {

void require_radius(double r) {
  if (!(r >= 0.0)) {
    throw InputError("radius must be >= 0, got " + std::to_string(r));
  }
}

}  // namespace

CountingMeasure::CountingMeasure(MetricContext ctx, std::vector<Atom> atoms)
    : ctx_(std::move(ctx)) {
  for (const Atom& a : atoms) {
    require_dimension(ctx_, a.point);
    if (a.multiplicity < 1) {
      throw InputError("multiplicity must be >= 1, got " +
                       std::to_string(a.multiplicity));
    }
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.point < b.point; });
  for (Atom& a : atoms) {
    if (!atoms_.empty() && atoms_.back().point == a.point) {
      atoms_.back().multiplicity += a.multiplicity;
    } else {
      atoms_.push_back(std::move(a));
    }
  }
  radii_.reserve(atoms_.size());
  for (const Atom& a : atoms_) {
    radii_.push_back(distance(ctx_.origin(), a.point));
    total_ += a.multiplicity;
  }
}

CountingMeasure restriction(const CountingMeasure& mu, double r) {
  require_radius(r);
  return mu.filter_by_radius([r](double rad) { return rad < r; });
}

Mass ball_mass(const CountingMeasure& mu, double r) {
  require_radius(r);
  Mass m = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu.radius(i) < r) m += mu.atoms()[i].multiplicity;
  }
  return m;
}

Mass boundary_mass(const CountingMeasure& mu, double r) {
  if (!(r > 0.0)) {
    throw InputError("sphere radius must be > 0, got " + std::to_string(r));
  }
  Mass m = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu.radius(i) == r) m += mu.atoms()[i].multiplicity;
  }
  return m;
}

Mass closed_ball_mass(const CountingMeasure& mu, double r) {
  require_radius(r);
  Mass m = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu.radius(i) <= r) m += mu.atoms()[i].multiplicity;
  }
  return m;
}

double integrate(const CountingMeasure& mu,
                 const std::function<double(const Point&)>& f) {
  double sum = 0.0;
  for (const Atom& a : mu.atoms()) {
    const double v = f(a.point);
    if (!std::isfinite(v)) {
      throw EvaluationError("integrand is not finite at an atom");
    }
    sum += static_cast<double>(a.multiplicity) * v;
  }
  return sum;
}

Mass set_mass(const CountingMeasure& mu, const PointSet& set) {
  Mass m = 0;
  for (const Atom& a : mu.atoms()) {
    if (set.contains(a.point)) m += a.multiplicity;
  }
  return m;
}

void require_same_context(const CountingMeasure& mu, const CountingMeasure& nu) {
  if (!(mu.context() == nu.context())) {
    throw InputError("measures do not share a metric context");
  }
}

}  // namespace weakhash
