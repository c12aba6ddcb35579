#ifndef WEAKHASH_MEASURE_HPP
#define WEAKHASH_MEASURE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "weakhash/point_set.hpp"
#include "weakhash/space.hpp"

namespace weakhash {

using Mass = std::int64_t;

struct Atom {
  Point point;
  Mass multiplicity = 1;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite superposition of Dirac masses with positive integer multiplicities.
///
/// The representation is canonical: atoms at identical points are merged and
/// the atom list is sorted lexicographically by coordinates, so two measures
/// compare equal iff they are the same measure.
class CountingMeasure {
 public:
  explicit CountingMeasure(MetricContext ctx, std::vector<Atom> atoms = {});

  [[nodiscard]] const MetricContext& context() const noexcept { return ctx_; }
  [[nodiscard]] std::span<const Atom> atoms() const noexcept { return atoms_; }
  [[nodiscard]] std::size_t size() const noexcept { return atoms_.size(); }
  [[nodiscard]] bool empty() const noexcept { return atoms_.empty(); }
  [[nodiscard]] Mass total_mass() const noexcept { return total_; }

  /// origin_distance of atom i, cached at construction.
  [[nodiscard]] double radius(std::size_t i) const { return radii_[i]; }
  [[nodiscard]] std::span<const double> radii() const noexcept { return radii_; }

  /// Keeps the atoms for which keep(radius) holds. Order is preserved.
  template <typename Pred>
  [[nodiscard]] CountingMeasure filter_by_radius(Pred keep) const {
    CountingMeasure out(ctx_);
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (keep(radii_[i])) {
        out.atoms_.push_back(atoms_[i]);
        out.radii_.push_back(radii_[i]);
        out.total_ += atoms_[i].multiplicity;
      }
    }
    return out;
  }

  friend bool operator==(const CountingMeasure& a, const CountingMeasure& b) {
    return a.ctx_ == b.ctx_ && a.atoms_ == b.atoms_;
  }

 private:
  MetricContext ctx_;
  std::vector<Atom> atoms_;
  std::vector<double> radii_;
  Mass total_ = 0;
};

/// mu^(r): the atoms strictly inside the open ball B_r(x0).
[[nodiscard]] CountingMeasure restriction(const CountingMeasure& mu, double r);

/// mu(B_r) for the open ball.
[[nodiscard]] Mass ball_mass(const CountingMeasure& mu, double r);

/// mu(dB_r): mass on the sphere of radius r. Requires r > 0.
[[nodiscard]] Mass boundary_mass(const CountingMeasure& mu, double r);

/// mu of the closed ball, ball_mass + boundary_mass.
[[nodiscard]] Mass closed_ball_mass(const CountingMeasure& mu, double r);

/// Sum of multiplicity * f(point). Throws EvaluationError if f is not finite
/// at some atom.
[[nodiscard]] double integrate(const CountingMeasure& mu,
                               const std::function<double(const Point&)>& f);

[[nodiscard]] Mass set_mass(const CountingMeasure& mu, const PointSet& set);

/// Throws InputError unless both measures live on the same context.
void require_same_context(const CountingMeasure& mu, const CountingMeasure& nu);

}  // namespace weakhash

#endif  // WEAKHASH_MEASURE_HPP
