#include "weakhash/space.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "weakhash/error.hpp"

namespace weakhash {

namespace {

void require_finite(const std::vector<double>& coords) {
  if (coords.empty()) {
    throw InputError("point must have dimension >= 1");
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!std::isfinite(coords[i])) {
      throw InputError("coordinate " + std::to_string(i) + " is not finite");
    }
  }
}

}  // namespace

Point::Point(std::initializer_list<double> coords) : coords_(coords) {
  require_finite(coords_);
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  require_finite(coords_);
}

MetricContext::MetricContext(std::size_t dimension)
    : origin_(std::vector<double>(dimension, 0.0)) {}

MetricContext::MetricContext(Point origin) : origin_(std::move(origin)) {
  if (origin_.dimension() == 0) {
    throw InputError("origin must have dimension >= 1");
  }
}

double distance(const Point& p, const Point& q) {
  if (p.dimension() != q.dimension()) {
    throw InputError("dimension mismatch: " + std::to_string(p.dimension()) +
                     " vs " + std::to_string(q.dimension()));
  }
  // Accumulate in a fixed order so distance(p, q) == distance(q, p) bitwise.
  double sum = 0.0;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    const double diff = p[i] - q[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double origin_distance(const MetricContext& ctx, const Point& p) {
  require_dimension(ctx, p);
  return distance(ctx.origin(), p);
}

void require_dimension(const MetricContext& ctx, const Point& p) {
  if (p.dimension() != ctx.dimension()) {
    throw InputError("point has dimension " + std::to_string(p.dimension()) +
                     ", context expects " + std::to_string(ctx.dimension()));
  }
}

}  // namespace weakhash
