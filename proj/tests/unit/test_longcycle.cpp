#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "cyclestab/error.hpp"
#include "cyclestab/families.hpp"
#include "cyclestab/graphs.hpp"
#include "cyclestab/harness.hpp"
#include "cyclestab/longcycle.hpp"
#include "cyclestab/oracle.hpp"
#include "util.hpp"

namespace cyclestab {
namespace {

using testing::make;

std::vector<Vertex> iota(Vertex n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Path 0..m-1 plus the given extra edges.
Graph path_plus(Vertex n, Vertex m, std::vector<Edge> extra) {
  for (Vertex i = 0; i + 1 < m; ++i) extra.push_back({i, i + 1});
  return make(n, extra);
}

TEST(PathState, Basics) {
  const Graph g = path_plus(5, 5, {{0, 3}, {4, 1}});
  const PathState p(g, iota(5));
  EXPECT_EQ(p.size(), 5);
  EXPECT_EQ(p.at(1), 0);
  EXPECT_EQ(p.index_of(3), 4);
  EXPECT_EQ(p.front_neighbors(), (std::vector<Vertex>{2, 4}));
  EXPECT_EQ(p.back_neighbors(), (std::vector<Vertex>{2, 4}));
  EXPECT_EQ(p.shifted_front(), (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(p.shifted_back(), (std::vector<Vertex>{3, 5}));
  EXPECT_THROW(PathState(g, {0, 2}), PreconditionError);
  EXPECT_THROW(PathState(g, {0, 1, 0}), PreconditionError);
}

TEST(Rotate, TextbookRotation) {
  // a-b-c-d with chord a-c.
  const Graph g = path_plus(4, 4, {{0, 2}});
  const PathState p(g, {0, 1, 2, 3});
  const PathState r = rotate(p, 2, End::Front);
  EXPECT_EQ(r.order(), (std::vector<Vertex>{1, 0, 2, 3}));
  EXPECT_EQ(r.front(), 1);
  EXPECT_EQ(r.index_of(0), 2);
  const PathState back = rotate(r, 2, End::Front);
  EXPECT_EQ(back.order(), p.order());
}

TEST(Rotate, BackRotation) {
  const Graph g = path_plus(5, 5, {{1, 4}});
  const PathState r = rotate(PathState(g, iota(5)), 1);
  EXPECT_EQ(r.order(), (std::vector<Vertex>{0, 1, 4, 3, 2}));
}

TEST(Rotate, NoValidPivotOnBarePath) {
  const Graph g = graphs::path(5);
  const PathState p(g, iota(5));
  for (Vertex v = 0; v < 5; ++v) EXPECT_THROW(rotate(p, v), PreconditionError);
  EXPECT_THROW(rotate(p, 7), PreconditionError);
}

TEST(CloseCrossing, C8WithChords) {
  // x_1..x_8 are vertices 0..7; chords x_1 x_6 and x_8 x_3.
  const Graph g = path_plus(8, 8, {{0, 5}, {7, 2}});
  const PathState p(g, iota(8));
  const CycleWitness c = close_crossing(p, 3, 6);
  EXPECT_EQ(c.cycle, (std::vector<Vertex>{0, 1, 2, 7, 6, 5}));
  EXPECT_TRUE(is_valid_cycle(g, c.cycle));
  EXPECT_THROW(close_crossing(p, 6, 3), PreconditionError);
  EXPECT_THROW(close_crossing(p, 3, 3), PreconditionError);
  EXPECT_THROW(close_crossing(p, 2, 6), PreconditionError);
}

TEST(CloseCrossing, WholePathWhenEndsAdjacent) {
  const Graph g = graphs::cycle(6);
  const PathState p(g, iota(6));
  EXPECT_EQ(close_crossing(p, 1, 6).cycle, iota(6));
}

TEST(Vine, SingleEar) {
  // Path x_1..x_8 = 0..7, x_1 ~ x_3, x_8 ~ x_6, ear x_2 - 8 - x_7.
  const Graph g = path_plus(9, 8, {{0, 2}, {7, 5}, {1, 8}, {8, 6}});
  const PathState p(g, iota(8));
  const Vine v = grow_vine(g, p, 3, 6);
  ASSERT_EQ(v.ears.size(), 1u);
  EXPECT_EQ(v.ears[0].s, 2);
  EXPECT_EQ(v.ears[0].t, 7);
  EXPECT_EQ(v.ears[0].path, (std::vector<Vertex>{1, 8, 6}));
  const CycleWitness c = vine_merge(p, v);
  EXPECT_TRUE(is_valid_cycle(g, c.cycle));
  EXPECT_NE(std::find(c.cycle.begin(), c.cycle.end(), 8), c.cycle.end());
  EXPECT_LE(c.length(), oracle::circumference(g).length);
  EXPECT_EQ(c.length(), 9);
}

TEST(Vine, TwoNestedEars) {
  // Path x_1..x_10 = 0..9, x_1 ~ x_3, x_10 ~ x_8, ears x_2 - 10 - x_5 and x_4 - 11 - x_9.
  const Graph g = path_plus(12, 10, {{0, 2}, {9, 7}, {1, 10}, {10, 4}, {3, 11}, {11, 8}});
  const PathState p(g, iota(10));
  const Vine v = grow_vine(g, p, 3, 8);
  ASSERT_EQ(v.ears.size(), 2u);
  EXPECT_LE(v.ears[0].t, 8);
  EXPECT_GT(v.ears[1].t, 8);
  const CycleWitness c = vine_merge(p, v);
  EXPECT_TRUE(is_valid_cycle(g, c.cycle));
  for (Vertex x : {0, 9, 10, 11}) {
    EXPECT_NE(std::find(c.cycle.begin(), c.cycle.end(), x), c.cycle.end()) << x;
  }
}

TEST(Vine, EarAtBoundary) {
  // The ear lands right next to i_0 and j_0.
  const Graph g = path_plus(7, 6, {{0, 2}, {5, 3}, {1, 6}, {6, 4}});
  const PathState p(g, iota(6));
  const Vine v = grow_vine(g, p, 3, 4);
  const CycleWitness c = vine_merge(p, v);
  EXPECT_TRUE(is_valid_cycle(g, c.cycle));
}

TEST(Vine, NotRequiredWhenGReachesH) {
  const Graph g = path_plus(8, 8, {{0, 5}, {7, 2}});
  const PathState p(g, iota(8));
  EXPECT_THROW(grow_vine(g, p, 6, 3), PreconditionError);
  EXPECT_THROW(vine_merge(p, Vine{}), PreconditionError);
}

TEST(FindLongCycle, Examples) {
  const auto p = find_long_cycle(graphs::petersen(), 8);
  ASSERT_TRUE(p.has_value());
  EXPECT_GE(p->length(), 8);
  EXPECT_TRUE(is_valid_cycle(graphs::petersen(), p->cycle));

  const Graph h = build_family(HFamily{10, 8, 3}).graph;
  EXPECT_FALSE(find_long_cycle(h, 8).has_value());
  LongCycleOptions tiny;
  tiny.budget = 10;
  EXPECT_FALSE(find_long_cycle(h, 8, tiny).has_value());

  const auto c9 = find_long_cycle(graphs::cycle(9), 9);
  ASSERT_TRUE(c9.has_value());
  EXPECT_EQ(c9->length(), 9);
  EXPECT_THROW(find_long_cycle(graphs::cycle(9), 2), PreconditionError);
}

TEST(FindLongCycle, DeterministicAndSound) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = harness::random_graph_under_preconditions(14, 3, seed);
    const auto a = find_long_cycle(g, 8);
    const auto b = find_long_cycle(g, 8);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(a->cycle, b->cycle);
      EXPECT_TRUE(is_valid_cycle(g, a->cycle));
      EXPECT_GE(a->length(), 8);
    }
  }
}

TEST(FindLongCycle, HamiltonianCycleOnLargeCirculant) {
  const Vertex offsets[] = {1, 3};
  const Graph g = graphs::circulant(2000, offsets);
  const auto c = find_long_cycle(g, 2000);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->length(), 2000);
  EXPECT_TRUE(is_valid_cycle(g, c->cycle));
}

TEST(Witness, Validators) {
  const Graph c5 = graphs::cycle(5);
  std::string why;
  EXPECT_TRUE(is_valid_cycle(c5, std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(is_valid_cycle(c5, std::vector<Vertex>{0, 1, 2}, &why));
  EXPECT_FALSE(why.empty());
  EXPECT_FALSE(is_valid_cycle(c5, std::vector<Vertex>{0, 1}));
  EXPECT_FALSE(is_valid_cycle(c5, std::vector<Vertex>{0, 1, 2, 3, 4, 0}));
  EXPECT_TRUE(is_valid_path(c5, std::vector<Vertex>{3}));
  EXPECT_FALSE(is_valid_path(c5, std::vector<Vertex>{}));
  EXPECT_FALSE(is_valid_path(c5, std::vector<Vertex>{0, 2}));
  EXPECT_FALSE(is_valid_path(c5, std::vector<Vertex>{0, 9}));
}

}  // namespace
}  // namespace cyclestab
