#ifndef WEAKHASH_APPROX_HPP
#define WEAKHASH_APPROX_HPP

#include <optional>

#include "weakhash/measure.hpp"

namespace weakhash {

/// Regular grid offset + h * Z^d.
class GridSpec {
 public:
  explicit GridSpec(double spacing);
  GridSpec(double spacing, Point offset);

  [[nodiscard]] double spacing() const noexcept { return spacing_; }
  /// Empty (dimension 0) means the grid is anchored at the context origin.
  [[nodiscard]] const Point& offset() const noexcept { return offset_; }

  [[nodiscard]] GridSpec halved() const;

  /// True iff every coordinate equals offset_i + k_i * h for an integer k_i,
  /// evaluated in the same floating-point expression snap_to_grid uses.
  [[nodiscard]] bool contains(const Point& p) const;

 private:
  double spacing_;
  Point offset_;
};

/// Nearest grid point, coordinate by coordinate; exact halves round toward
/// the smaller coordinate. |p - result| <= h * sqrt(d) / 2.
[[nodiscard]] Point snap_to_grid(const Point& p, const GridSpec& grid);

/// Moves every atom of mu strictly inside B_R to its grid point, keeping
/// multiplicities; atoms outside B_R are dropped.
[[nodiscard]] CountingMeasure snap_measure(const CountingMeasure& mu, double R,
                                           const GridSpec& grid);

struct CertifiedApproximation {
  CountingMeasure approximant;
  /// truncated_weak_hash(original, approximant, window) as computed.
  double certified_error = 0.0;
  double window = 0.0;
  double spacing = 0.0;
  int halvings = 0;
};

inline constexpr int kMaxHalvings = 60;

/// Snaps the atoms of mu in B_R to a grid, halving the spacing (from the
/// supplied grid, or h = 1 anchored at the origin) until the exact truncated
/// d# over [0, R] is at most eps. Throws IterationCapError after kMaxHalvings
/// halvings.
[[nodiscard]] CertifiedApproximation approximate(const CountingMeasure& mu, double R,
                                                 double eps,
                                                 std::optional<GridSpec> grid = {});

}  // namespace weakhash

#endif  // WEAKHASH_APPROX_HPP
