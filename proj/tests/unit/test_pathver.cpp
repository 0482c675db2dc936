#include <gtest/gtest.h>

#include "cyclestab/certificate.hpp"
#include "cyclestab/error.hpp"
#include "cyclestab/families.hpp"
#include "cyclestab/harness.hpp"
#include "cyclestab/graphs.hpp"
#include "cyclestab/oracle.hpp"
#include "cyclestab/pathver.hpp"
#include "cyclestab/witness.hpp"
#include "util.hpp"

namespace cyclestab {
namespace {

TEST(Apex, WheelAndStar) {
  const Graph w = apex(graphs::cycle(5));
  EXPECT_EQ(w.order(), 6);
  EXPECT_EQ(w.size(), 10u);
  EXPECT_EQ(w.degree(5), 5);
  const Graph s = apex(graphs::empty(3));
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.degree(3), 3);
  EXPECT_EQ(s.degree(0), 1);
}

TEST(Apex, LongestPathIdentity) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Vertex n = 6 + static_cast<Vertex>(seed % 5);
    const Graph g = harness::random_graph_under_preconditions(n, 2, seed);
    const Vertex lp = oracle::longest_path_order(g).order;
    if (lp < oracle::circumference(g).length) continue;
    EXPECT_EQ(lp + 1, oracle::circumference(apex(g)).length) << serialize_edge_list(g);
  }
  const Graph k1 = build_family(K1Cliques{1, 2}).graph;
  EXPECT_EQ(oracle::circumference(apex(k1)).length, 7);
}

TEST(DecidePath, CliqueFamilyIsT0) {
  const Graph g = build_family(K1Cliques{1, 2}).graph;
  ASSERT_EQ(g.order(), 7);
  EXPECT_EQ(oracle::longest_path_order(g).order, 6);
  const Decision d = decide_path(g, 2);
  EXPECT_EQ(d.problem, Problem::Path);
  EXPECT_EQ(d.threshold, 7);
  EXPECT_EQ(d.verdict, Verdict::T0);
  EXPECT_FALSE(std::holds_alternative<std::monostate>(d.evidence));
  EXPECT_TRUE(check_certificate(g, d).ok);
}

TEST(DecidePath, CycleIsT1) {
  const Graph g = graphs::cycle(7);
  const Decision d = decide_path(g, 2);
  EXPECT_EQ(d.verdict, Verdict::T1);
  ASSERT_TRUE(std::holds_alternative<PathWitness>(d.evidence));
  EXPECT_EQ(std::get<PathWitness>(d.evidence).path.size(), 7u);
  EXPECT_TRUE(is_valid_path(g, std::get<PathWitness>(d.evidence).path));
}

TEST(DecidePath, PetersenIsT1) {
  const Decision d = decide_path(graphs::petersen(), 3);
  EXPECT_EQ(d.threshold, 9);
  EXPECT_EQ(d.verdict, Verdict::T1);
  EXPECT_TRUE(check_certificate(graphs::petersen(), d).ok);
}

TEST(DecidePath, SmallOrderNeedsHamiltonPath) {
  // n <= 2k + 1: threshold n.
  const Graph k5 = graphs::complete(5);
  const Decision d = decide_path(k5, 3);
  EXPECT_EQ(d.threshold, 5);
  EXPECT_EQ(d.verdict, Verdict::T1);
  const Graph s = graphs::star(5);
  const Decision e = decide_path(s, 1);
  EXPECT_EQ(e.threshold, 5);
  EXPECT_EQ(e.verdict, Verdict::T0);
  EXPECT_TRUE(check_certificate(s, e).ok);
}

TEST(DecidePath, RejectsOutsideDomain) {
  EXPECT_THROW(decide_path(graphs::empty(4), 1), PreconditionError);
  EXPECT_THROW(decide_path(graphs::cycle(6), 3), PreconditionError);
  EXPECT_THROW(decide_path(graphs::cycle(6), 0), PreconditionError);
}

TEST(RecognizePathFamily, Examples) {
  const Graph jc = build_family(JoinedCenters{1, 1, 2}).graph;
  const auto e = recognize_path_family(jc, 2);
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(check_embedding(jc, *e));
  EXPECT_LT(max_path_order_bound(e->spec), std::min<Vertex>(jc.order(), 7));
  EXPECT_FALSE(recognize_path_family(graphs::cycle(7), 2).has_value());
  EXPECT_FALSE(recognize_path_family(graphs::complete(5), 2).has_value());
}

TEST(RecognizePathFamily, StarIsMatchingApex) {
  // K_{1,6} = K_1 + 6K_1 has longest path 3 < min{7, 5}.
  const Graph s = graphs::star(7);
  const auto e = recognize_path_family(s, 1);
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(check_embedding(s, *e));
}

TEST(RecognizePathFamily, CatalogHostsMatch) {
  const std::vector<std::pair<FamilySpec, Vertex>> cases = {
      {K1Cliques{2, 3}, 3}, {JoinedCenters{1, 2, 3}, 3}, {K1Matching{7}, 2}, {K1StarMatching{2, 4}, 2}};
  for (const auto& [spec, k] : cases) {
    const Graph g = build_family(spec).graph;
    const auto e = recognize_path_family(g, k);
    ASSERT_TRUE(e.has_value()) << describe(spec);
    EXPECT_TRUE(check_embedding(g, *e)) << describe(spec);
    const Decision d = decide_path(g, k);
    EXPECT_EQ(d.verdict, Verdict::T0) << describe(spec);
    EXPECT_TRUE(check_certificate(g, d).ok) << describe(spec);
    EXPECT_LT(oracle::longest_path_order(g).order, d.threshold) << describe(spec);
  }
}

}  // namespace
}  // namespace cyclestab
