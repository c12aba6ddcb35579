#ifndef WEAKHASH_MAX_FLOW_HPP
#define WEAKHASH_MAX_FLOW_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace weakhash {

/// Source -> left -> right -> sink network with integer node capacities on
/// the source and sink arcs and unbounded middle arcs.
///
/// Middle arcs may be added between calls to solve(); the flow found so far
/// stays feasible, so a threshold sweep only pays for the extra augmentation.
class BipartiteFlow {
 public:
  BipartiteFlow(std::span<const std::int64_t> left_capacity,
                std::span<const std::int64_t> right_capacity);

  void add_edge(std::size_t left, std::size_t right);

  /// Augments to a maximum flow over the current arc set and returns its value.
  std::int64_t solve();

  [[nodiscard]] std::int64_t value() const noexcept { return value_; }
  [[nodiscard]] std::size_t left_size() const noexcept { return n_left_; }
  [[nodiscard]] std::size_t right_size() const noexcept { return n_right_; }

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    std::int64_t cap;
  };

  void add_arc(std::size_t from, std::size_t to, std::int64_t cap);
  bool build_levels();
  std::int64_t push(std::size_t v, std::int64_t limit);

  std::size_t n_left_;
  std::size_t n_right_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  std::int64_t value_ = 0;
};

}  // namespace weakhash

#endif  // WEAKHASH_MAX_FLOW_HPP
