#include "weakhash/point_set.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "weakhash/error.hpp"

namespace weakhash {

class PointSet::Node {
 public:
  virtual ~Node() = default;
  virtual bool contains(const Point& p) const = 0;
  virtual bool on_boundary(const Point& p) const = 0;
  virtual bool bounded() const = 0;
  virtual void describe(std::ostream& os) const = 0;
};

namespace {

void print_point(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
}

class Everything final : public PointSet::Node {
 public:
  bool contains(const Point&) const override { return true; }
  bool on_boundary(const Point&) const override { return false; }
  bool bounded() const override { return false; }
  void describe(std::ostream& os) const override { os << "X"; }
};

class Nothing final : public PointSet::Node {
 public:
  bool contains(const Point&) const override { return false; }
  bool on_boundary(const Point&) const override { return false; }
  bool bounded() const override { return true; }
  void describe(std::ostream& os) const override { os << "{}"; }
};

class Ball final : public PointSet::Node {
 public:
  Ball(Point center, double radius, bool closed)
      : center_(std::move(center)), radius_(radius), closed_(closed) {
    if (!(radius_ >= 0.0) || !std::isfinite(radius_)) {
      throw InputError("ball radius must be finite and >= 0");
    }
  }
  bool contains(const Point& p) const override {
    const double d = distance(center_, p);
    return closed_ ? d <= radius_ : d < radius_;
  }
  bool on_boundary(const Point& p) const override {
    return distance(center_, p) == radius_;
  }
  bool bounded() const override { return true; }
  void describe(std::ostream& os) const override {
    os << (closed_ ? "ClosedBall" : "OpenBall");
    print_point(os, center_);
    os << " r=" << radius_;
  }

 private:
  Point center_;
  double radius_;
  bool closed_;
};

class Box final : public PointSet::Node {
 public:
  Box(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.dimension() != hi_.dimension()) {
      throw InputError("box corners differ in dimension");
    }
    for (std::size_t i = 0; i < lo_.dimension(); ++i) {
      if (lo_[i] > hi_[i]) throw InputError("box has lo > hi");
    }
  }
  bool contains(const Point& p) const override {
    check(p);
    for (std::size_t i = 0; i < p.dimension(); ++i) {
      if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
    }
    return true;
  }
  bool on_boundary(const Point& p) const override {
    if (!contains(p)) return false;
    for (std::size_t i = 0; i < p.dimension(); ++i) {
      if (p[i] == lo_[i] || p[i] == hi_[i]) return true;
    }
    return false;
  }
  bool bounded() const override { return true; }
  void describe(std::ostream& os) const override {
    os << "Box";
    print_point(os, lo_);
    print_point(os, hi_);
  }

 private:
  void check(const Point& p) const {
    if (p.dimension() != lo_.dimension()) {
      throw InputError("point dimension does not match box");
    }
  }
  Point lo_;
  Point hi_;
};

enum class Op { kUnion, kIntersection, kDifference };

class Composite final : public PointSet::Node {
 public:
  Composite(Op op, std::shared_ptr<const Node> a, std::shared_ptr<const Node> b)
      : op_(op), a_(std::move(a)), b_(std::move(b)) {}
  bool contains(const Point& p) const override {
    switch (op_) {
      case Op::kUnion: return a_->contains(p) || b_->contains(p);
      case Op::kIntersection: return a_->contains(p) && b_->contains(p);
      case Op::kDifference: return a_->contains(p) && !b_->contains(p);
    }
    return false;
  }
  bool on_boundary(const Point& p) const override {
    return a_->on_boundary(p) || b_->on_boundary(p);
  }
  bool bounded() const override {
    switch (op_) {
      case Op::kUnion: return a_->bounded() && b_->bounded();
      case Op::kIntersection: return a_->bounded() || b_->bounded();
      case Op::kDifference: return a_->bounded();
    }
    return false;
  }
  void describe(std::ostream& os) const override {
    static constexpr const char* kNames[] = {" | ", " & ", " \\ "};
    os << '[';
    a_->describe(os);
    os << kNames[static_cast<int>(op_)];
    b_->describe(os);
    os << ']';
  }

 private:
  Op op_;
  std::shared_ptr<const Node> a_;
  std::shared_ptr<const Node> b_;
};

}  // namespace

PointSet PointSet::everything() { return PointSet(std::make_shared<Everything>()); }
PointSet PointSet::nothing() { return PointSet(std::make_shared<Nothing>()); }

PointSet PointSet::closed_ball(Point center, double radius) {
  return PointSet(std::make_shared<Ball>(std::move(center), radius, true));
}

PointSet PointSet::open_ball(Point center, double radius) {
  return PointSet(std::make_shared<Ball>(std::move(center), radius, false));
}

PointSet PointSet::box(Point lo, Point hi) {
  return PointSet(std::make_shared<Box>(std::move(lo), std::move(hi)));
}

PointSet PointSet::unite(PointSet a, PointSet b) {
  return PointSet(std::make_shared<Composite>(Op::kUnion, a.node_, b.node_));
}

PointSet PointSet::intersect(PointSet a, PointSet b) {
  return PointSet(std::make_shared<Composite>(Op::kIntersection, a.node_, b.node_));
}

PointSet PointSet::subtract(PointSet a, PointSet b) {
  return PointSet(std::make_shared<Composite>(Op::kDifference, a.node_, b.node_));
}

bool PointSet::contains(const Point& p) const { return node_->contains(p); }
bool PointSet::on_boundary(const Point& p) const { return node_->on_boundary(p); }
bool PointSet::bounded() const { return node_->bounded(); }

std::string PointSet::describe() const {
  std::ostringstream os;
  node_->describe(os);
  return os.str();
}

}  // namespace weakhash
