#include "weakhash/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "weakhash/error.hpp"

namespace weakhash {

namespace {
constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;
}

BipartiteFlow::BipartiteFlow(std::span<const std::int64_t> left_capacity,
                             std::span<const std::int64_t> right_capacity)
    : n_left_(left_capacity.size()),
      n_right_(right_capacity.size()),
      source_(0),
      sink_(left_capacity.size() + right_capacity.size() + 1),
      graph_(left_capacity.size() + right_capacity.size() + 2) {
  for (std::size_t i = 0; i < n_left_; ++i) {
    add_arc(source_, 1 + i, left_capacity[i]);
  }
  for (std::size_t j = 0; j < n_right_; ++j) {
    add_arc(1 + n_left_ + j, sink_, right_capacity[j]);
  }
}

void BipartiteFlow::add_edge(std::size_t left, std::size_t right) {
  if (left >= n_left_ || right >= n_right_) {
    throw InputError("flow edge endpoint out of range");
  }
  add_arc(1 + left, 1 + n_left_ + right, kUnbounded);
}

void BipartiteFlow::add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
  graph_[from].push_back({to, graph_[to].size(), cap});
  graph_[to].push_back({from, graph_[from].size() - 1, 0});
}

bool BipartiteFlow::build_levels() {
  level_.assign(graph_.size(), -1);
  std::queue<std::size_t> queue;
  level_[source_] = 0;
  queue.push(source_);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (const Arc& a : graph_[v]) {
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[sink_] >= 0;
}

std::int64_t BipartiteFlow::push(std::size_t v, std::int64_t limit) {
  if (v == sink_) return limit;
  for (std::size_t& i = cursor_[v]; i < graph_[v].size(); ++i) {
    Arc& a = graph_[v][i];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    const std::int64_t pushed = push(a.to, std::min(limit, a.cap));
    if (pushed > 0) {
      a.cap -= pushed;
      graph_[a.to][a.rev].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t BipartiteFlow::solve() {
  while (build_levels()) {
    cursor_.assign(graph_.size(), 0);
    while (const std::int64_t f = push(source_, kUnbounded)) {
      value_ += f;
    }
  }
  return value_;
}

}  // namespace weakhash
