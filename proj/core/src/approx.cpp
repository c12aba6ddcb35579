#include "weakhash/approx.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "weakhash/error.hpp"
#include "weakhash/weakhash.hpp"

namespace weakhash {

namespace {

double anchor(const GridSpec& grid, std::size_t i) {
  return grid.offset().dimension() == 0 ? 0.0 : grid.offset()[i];
}

void require_grid_dimension(const GridSpec& grid, const Point& p) {
  if (grid.offset().dimension() != 0 && grid.offset().dimension() != p.dimension()) {
    throw InputError("grid offset dimension does not match point");
  }
}

}  // namespace

GridSpec::GridSpec(double spacing) : spacing_(spacing) {
  if (!(spacing_ > 0.0) || !std::isfinite(spacing_)) {
    throw InputError("grid spacing must be finite and > 0");
  }
}

GridSpec::GridSpec(double spacing, Point offset) : GridSpec(spacing) {
  offset_ = std::move(offset);
}

GridSpec GridSpec::halved() const {
  GridSpec g(*this);
  g.spacing_ /= 2.0;
  return g;
}

bool GridSpec::contains(const Point& p) const {
  require_grid_dimension(*this, p);
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    const double o = anchor(*this, i);
    const double k = std::nearbyint((p[i] - o) / spacing_);
    if (o + k * spacing_ != p[i]) return false;
  }
  return true;
}

Point snap_to_grid(const Point& p, const GridSpec& grid) {
  require_grid_dimension(grid, p);
  std::vector<double> out(p.dimension());
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    const double o = anchor(grid, i);
    const double t = (p[i] - o) / grid.spacing();
    const double k = std::ceil(t - 0.5);  // ties go down
    out[i] = o + k * grid.spacing();
  }
  return Point(std::move(out));
}

CountingMeasure snap_measure(const CountingMeasure& mu, double R, const GridSpec& grid) {
  std::vector<Atom> snapped;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu.radius(i) < R) {
      snapped.push_back({snap_to_grid(mu.atoms()[i].point, grid),
                         mu.atoms()[i].multiplicity});
    }
  }
  return CountingMeasure(mu.context(), std::move(snapped));
}

CertifiedApproximation approximate(const CountingMeasure& mu, double R, double eps,
                                   std::optional<GridSpec> grid) {
  if (!(R > 0.0)) throw InputError("window radius must be > 0");
  if (!(eps > 0.0)) throw InputError("error budget must be > 0");
  GridSpec g = grid.value_or(GridSpec(1.0, mu.context().origin()));
  for (int halvings = 0; halvings <= kMaxHalvings; ++halvings) {
    CountingMeasure candidate = snap_measure(mu, R, g);
    const double err = truncated_weak_hash(mu, candidate, R);
    if (err <= eps) {
      return {std::move(candidate), err, R, g.spacing(), halvings};
    }
    g = g.halved();
  }
  throw IterationCapError("no grid within " + std::to_string(kMaxHalvings) +
                          " halvings meets the error budget");
}

}  // namespace weakhash
