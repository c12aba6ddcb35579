#include <gtest/gtest.h>

#include <vector>

#include "weakhash/max_flow.hpp"
#include "weakhash/error.hpp"

namespace weakhash {
namespace {

TEST(BipartiteFlowTest, EmptyNetwork) {
  BipartiteFlow flow(std::vector<std::int64_t>{}, std::vector<std::int64_t>{2});
  EXPECT_EQ(flow.solve(), 0);
}

TEST(BipartiteFlowTest, NodeCapacitiesBind) {
  const std::vector<std::int64_t> left{3, 1};
  const std::vector<std::int64_t> right{2, 5};
  BipartiteFlow flow(left, right);
  flow.add_edge(0, 0);
  EXPECT_EQ(flow.solve(), 2);
  flow.add_edge(1, 1);
  EXPECT_EQ(flow.solve(), 3);
  flow.add_edge(0, 1);
  EXPECT_EQ(flow.solve(), 4);
}

TEST(BipartiteFlowTest, IncrementalMatchesFreshSolve) {
  // Hall deficiency example: three left units compete for one right unit
  // until the last arc opens a detour.
  const std::vector<std::int64_t> left{1, 1, 1};
  const std::vector<std::int64_t> right{1, 1, 1};
  BipartiteFlow incremental(left, right);
  incremental.add_edge(0, 0);
  incremental.add_edge(1, 0);
  incremental.add_edge(2, 0);
  EXPECT_EQ(incremental.solve(), 1);
  incremental.add_edge(0, 1);
  incremental.add_edge(1, 2);
  EXPECT_EQ(incremental.solve(), 3);

  BipartiteFlow fresh(left, right);
  for (auto [i, j] : {std::pair{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 2}}) fresh.add_edge(i, j);
  EXPECT_EQ(fresh.solve(), 3);
}

TEST(BipartiteFlowTest, RejectsOutOfRangeArc) {
  BipartiteFlow flow(std::vector<std::int64_t>{1}, std::vector<std::int64_t>{1});
  EXPECT_THROW(flow.add_edge(1, 0), InputError);
}

}  // namespace
}  // namespace weakhash
