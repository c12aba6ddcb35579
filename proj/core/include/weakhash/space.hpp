#ifndef WEAKHASH_SPACE_HPP
#define WEAKHASH_SPACE_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace weakhash {

/// A point of R^d. Coordinates are always finite.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<double> coords);
  explicit Point(std::vector<double> coords);

  [[nodiscard]] std::size_t dimension() const noexcept { return coords_.size(); }
  [[nodiscard]] std::span<const double> coordinates() const noexcept { return coords_; }
  [[nodiscard]] double operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

/// Dimension of the ambient space plus the fixed origin x0 that all ball
/// restrictions are centred on.
class MetricContext {
 public:
  explicit MetricContext(std::size_t dimension);
  explicit MetricContext(Point origin);

  [[nodiscard]] std::size_t dimension() const noexcept { return origin_.dimension(); }
  [[nodiscard]] const Point& origin() const noexcept { return origin_; }

  friend bool operator==(const MetricContext&, const MetricContext&) = default;

 private:
  Point origin_;
};

/// Euclidean distance. Throws InputError on a dimension mismatch.
[[nodiscard]] double distance(const Point& p, const Point& q);

/// Distance from the context origin to p.
[[nodiscard]] double origin_distance(const MetricContext& ctx, const Point& p);

void require_dimension(const MetricContext& ctx, const Point& p);

}  // namespace weakhash

#endif  // WEAKHASH_SPACE_HPP
