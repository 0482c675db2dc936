#include <gtest/gtest.h>

#include <algorithm>

#include "cyclestab/error.hpp"
#include "cyclestab/graph.hpp"
#include "cyclestab/graphs.hpp"
#include "util.hpp"

namespace cyclestab {
namespace {

using testing::make;

TEST(EdgeList, ParsesTriangle) {
  const Graph g = parse_edge_list("3 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g, graphs::complete(3));
}

TEST(EdgeList, EdgelessGraph) {
  const Graph g = parse_edge_list("2 0\n");
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 0u);
}

TEST(EdgeList, SelfLoopReportsLine) {
  try {
    parse_edge_list("3 1\n0 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(EdgeList, RejectsMalformedInput) {
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("x y\n"), ParseError);
}

TEST(EdgeList, CommentsAndRoundTrip) {
  const Graph g = parse_edge_list("# petersen-ish\n4 2\n# edge\n2 3\n0 1\n");
  EXPECT_EQ(g.size(), 2u);
  const std::string text = serialize_edge_list(graphs::petersen());
  EXPECT_EQ(parse_edge_list(text), graphs::petersen());
  EXPECT_EQ(serialize_edge_list(parse_edge_list(text)), text);
}

TEST(Graph6, RoundTrip) {
  for (const Graph& g : {graphs::petersen(), graphs::cycle(7), graphs::empty(1), graphs::complete(12)}) {
    const std::string text = to_graph6(g);
    EXPECT_EQ(parse_graph6(text), g);
    EXPECT_EQ(parse_graph(text), g);
  }
}

TEST(Graph, AdjacencyWithAndWithoutBitset) {
  const Graph small = graphs::cycle(6);
  EXPECT_TRUE(small.has_bitset());
  EXPECT_TRUE(small.adjacent(0, 5));
  EXPECT_FALSE(small.adjacent(0, 3));
  const Graph big = graphs::cycle(600);
  EXPECT_FALSE(big.has_bitset());
  EXPECT_TRUE(big.adjacent(599, 0));
  EXPECT_FALSE(big.adjacent(10, 12));
}

TEST(Graph, RejectsSelfLoopsAndDuplicates) {
  EXPECT_THROW(make(3, {{1, 1}}), Error);
  EXPECT_THROW(make(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(make(3, {{0, 3}}), Error);
}

TEST(Operations, Join) {
  EXPECT_EQ(join(graphs::complete(1), graphs::complete(1)), graphs::complete(2));
  const Graph k2e3 = join(graphs::complete(2), graphs::empty(3));
  EXPECT_EQ(k2e3.order(), 5);
  EXPECT_EQ(k2e3.size(), 7u);
  const Graph wheel = join(graphs::complete(1), graphs::cycle(5));
  EXPECT_EQ(wheel.order(), 6);
  EXPECT_EQ(wheel.size(), 10u);
}

TEST(Operations, CopiesAndUnion) {
  const Graph three_k2 = copies(graphs::complete(2), 3);
  EXPECT_EQ(three_k2.order(), 6);
  EXPECT_EQ(three_k2.size(), 3u);
  EXPECT_EQ(disjoint_union({}).order(), 0);
  const Graph two_k4 = copies(graphs::complete(4), 2);
  EXPECT_EQ(two_k4.order(), 8);
  EXPECT_EQ(two_k4.size(), 12u);
}

TEST(Operations, Complement) {
  EXPECT_EQ(complement(graphs::complete(4)).size(), 0u);
  const Graph c5c = complement(graphs::cycle(5));
  // i -> 2i mod 5 maps C5 onto its complement.
  for (Vertex i = 0; i < 5; ++i) {
    EXPECT_TRUE(c5c.adjacent((2 * i) % 5, (2 * (i + 1)) % 5));
  }
  EXPECT_EQ(c5c.size(), 5u);
  EXPECT_EQ(complement(graphs::empty(1)), graphs::empty(1));
}

TEST(Operations, Induced) {
  const Vertex pick[] = {1, 3, 4};
  EXPECT_EQ(induced(graphs::complete(5), pick).graph, graphs::complete(3));
  const Vertex front[] = {0, 1, 2};
  EXPECT_EQ(induced(graphs::cycle(6), front).graph, graphs::path(3));
  EXPECT_EQ(induced(graphs::petersen(), std::span<const Vertex>{}).graph.order(), 0);
  const Vertex bad[] = {7};
  EXPECT_THROW(induced(graphs::cycle(5), bad), Error);
}

TEST(Operations, ApexAndEdgeEdits) {
  const Graph w = with_apex(graphs::cycle(5));
  EXPECT_EQ(w.order(), 6);
  EXPECT_EQ(w.degree(5), 5);
  const Graph plus = with_edge(graphs::cycle(5), {0, 2});
  EXPECT_EQ(plus.size(), 6u);
  EXPECT_EQ(without_edge(plus, {0, 2}), graphs::cycle(5));
}

TEST(Degrees, Profiles) {
  const auto c5 = degree_profile(graphs::cycle(5));
  EXPECT_EQ(c5.min_degree, 2);
  EXPECT_EQ(c5.second_min_degree, 2);
  EXPECT_TRUE(std::all_of(c5.degrees.begin(), c5.degrees.end(), [](Vertex d) { return d == 2; }));
  const auto k34 = degree_profile(graphs::complete_bipartite(3, 4));
  EXPECT_EQ(k34.min_degree, 3);
  EXPECT_EQ(k34.second_min_degree, 3);
  const auto star = degree_profile(graphs::star(5));
  EXPECT_EQ(star.min_degree, 1);
  EXPECT_EQ(star.second_min_degree, 1);
  EXPECT_FALSE(degree_profile(graphs::empty(1)).second_min_degree.has_value());
}

TEST(Biconnectivity, Examples) {
  EXPECT_TRUE(is_biconnected(graphs::cycle(4)));
  const Graph bowtie = make(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  const auto r = biconnectivity(bowtie);
  EXPECT_FALSE(r.biconnected);
  EXPECT_TRUE(r.connected);
  ASSERT_EQ(r.articulation_points.size(), 1u);
  EXPECT_EQ(r.articulation_points[0], 2);
  EXPECT_FALSE(is_biconnected(graphs::complete(2)));
  EXPECT_FALSE(is_biconnected(graphs::path(5)));
  EXPECT_FALSE(is_connected(graphs::empty(2)));
}

TEST(Biconnectivity, LongPathDoesNotOverflowStack) {
  const Graph p = graphs::path(200000);
  EXPECT_TRUE(is_connected(p));
  EXPECT_EQ(biconnectivity(p).articulation_points.size(), 199998u);
}

TEST(Components, Labels) {
  Vertex count = 0;
  const auto labels = component_labels(copies(graphs::cycle(3), 3), &count);
  EXPECT_EQ(count, 3);
  EXPECT_EQ(labels[0], 0);
  EXPECT_EQ(labels[3], 1);
  EXPECT_EQ(labels[8], 2);
}

TEST(Generators, Basics) {
  EXPECT_EQ(graphs::petersen().size(), 15u);
  EXPECT_EQ(graphs::matching(5).size(), 2u);
  EXPECT_EQ(graphs::matching(5).order(), 5);
  EXPECT_EQ(graphs::star(5).size(), 4u);
  const Vertex offsets[] = {1, 2};
  const Graph c = graphs::circulant(10, offsets);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(c.degree(v), 4);
}

}  // namespace
}  // namespace cyclestab
