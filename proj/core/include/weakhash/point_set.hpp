#ifndef WEAKHASH_POINT_SET_HPP
#define WEAKHASH_POINT_SET_HPP

#include <memory>
#include <string>

#include "weakhash/space.hpp"

namespace weakhash {

/// Decidable subset of R^d used for mass queries.
///
/// Besides membership a set reports whether a point lies on its topological
/// boundary. For composite sets (union, intersection, difference) the answer
/// is the union of the operands' boundaries, which contains the true boundary;
/// callers that require mu(boundary A) = 0 may therefore reject some valid
/// sets but never accept an invalid one.
class PointSet {
 public:
  static PointSet everything();
  static PointSet nothing();
  static PointSet closed_ball(Point center, double radius);
  static PointSet open_ball(Point center, double radius);
  /// Closed axis-aligned box [lo, hi].
  static PointSet box(Point lo, Point hi);

  static PointSet unite(PointSet a, PointSet b);
  static PointSet intersect(PointSet a, PointSet b);
  static PointSet subtract(PointSet a, PointSet b);

  [[nodiscard]] bool contains(const Point& p) const;
  [[nodiscard]] bool on_boundary(const Point& p) const;
  [[nodiscard]] bool bounded() const;
  [[nodiscard]] std::string describe() const;

  class Node;

 private:
  explicit PointSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace weakhash

#endif  // WEAKHASH_POINT_SET_HPP
