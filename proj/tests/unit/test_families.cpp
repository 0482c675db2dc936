#include <gtest/gtest.h>

#include <algorithm>

#include "cyclestab/error.hpp"
#include "cyclestab/families.hpp"
#include "cyclestab/graphs.hpp"
#include "cyclestab/oracle.hpp"
#include "util.hpp"

namespace cyclestab {
namespace {

using testing::make;

std::vector<Vertex> sorted_degrees(const Graph& g) {
  auto d = degree_profile(g).degrees;
  std::sort(d.rbegin(), d.rend());
  return d;
}

TEST(Build, H883) {
  const auto h = build_family(HFamily{8, 8, 3});
  EXPECT_EQ(h.graph.order(), 8);
  EXPECT_EQ(h.graph.size(), 19u);
  EXPECT_EQ(sorted_degrees(h.graph), (std::vector<Vertex>{7, 7, 7, 4, 4, 3, 3, 3}));
  ASSERT_EQ(h.roles.size(), 8u);
  EXPECT_EQ(format_role(h.roles[0]), "A/0");
}

TEST(Build, HStructure) {
  for (const HFamily spec : {HFamily{8, 8, 3}, HFamily{12, 8, 3}, HFamily{9, 9, 4}, HFamily{5, 8, 3}}) {
    const auto h = build_family(spec);
    for (Vertex u = 0; u < h.graph.order(); ++u) {
      for (Vertex v = u + 1; v < h.graph.order(); ++v) {
        const RoleKind a = h.roles[u].kind, b = h.roles[v].kind;
        const bool adj = h.graph.adjacent(u, v);
        if (a == RoleKind::B && b == RoleKind::B) EXPECT_FALSE(adj);
        if ((a == RoleKind::B && b == RoleKind::C) || (a == RoleKind::C && b == RoleKind::B)) EXPECT_FALSE(adj);
        if (a != RoleKind::B && b != RoleKind::B) EXPECT_TRUE(adj);
        if ((a == RoleKind::A && b == RoleKind::B) || (a == RoleKind::B && b == RoleKind::A)) EXPECT_TRUE(adj);
      }
    }
    EXPECT_EQ(static_cast<std::int64_t>(h.graph.size()), family_edge_count(spec));
  }
}

TEST(Build, F1) {
  const auto f = build_family(F1Family{1, 3});
  EXPECT_EQ(f.graph.order(), 8);
  EXPECT_EQ(f.graph.size(), 17u);
}

TEST(Build, MatchingLeavesOddVertex) {
  const Graph m5 = graphs::matching(5);
  EXPECT_EQ(m5.size(), 2u);
  EXPECT_EQ(degree_profile(m5).min_degree, 0);
  const auto k2m = build_family(K2Matching{7});
  EXPECT_EQ(k2m.graph.order(), 9);
  EXPECT_EQ(k2m.graph.size(), 1u + 14u + 3u);
}

TEST(Build, RolesMatchHostAdjacency) {
  const std::vector<FamilySpec> specs = {
      HFamily{10, 8, 3}, FFamily{2, 1, 4}, F1Family{2, 3},  FVFamily{2, 4},  K2Matching{7},
      K2StarMatching{2, 5}, K3Matching{8}, K1Cliques{2, 3}, JoinedCenters{1, 2, 2},
      K1Matching{7},     K1StarMatching{3, 4}};
  for (const auto& spec : specs) {
    const auto lg = build_family(spec);
    ASSERT_EQ(static_cast<Vertex>(lg.roles.size()), lg.graph.order()) << describe(spec);
    EXPECT_EQ(lg.graph.order(), host_order(spec));
    for (Vertex u = 0; u < lg.graph.order(); ++u) {
      EXPECT_TRUE(role_in_host(spec, lg.roles[u]));
      for (Vertex v = u + 1; v < lg.graph.order(); ++v) {
        EXPECT_EQ(lg.graph.adjacent(u, v), host_adjacent(spec, lg.roles[u], lg.roles[v]))
            << describe(spec) << " " << format_role(lg.roles[u]) << " " << format_role(lg.roles[v]);
      }
    }
    EXPECT_TRUE(check_embedding(lg.graph, {spec, lg.roles})) << describe(spec);
  }
}

TEST(EdgeCount, Formula) {
  EXPECT_EQ(family_edge_count(HFamily{8, 8, 3}), 19);
  EXPECT_EQ(family_edge_count(HFamily{5, 5, 2}), 7);
  EXPECT_EQ(family_edge_count(HFamily{5, 8, 3}), 10);
  EXPECT_THROW(family_edge_count(FFamily{1, 1, 3}), Error);
}

TEST(Validate, RejectsBadParameters) {
  EXPECT_THROW(validate(HFamily{8, 8, 0}), InvalidParameters);
  EXPECT_THROW(validate(HFamily{8, 5, 3}), InvalidParameters);
  EXPECT_THROW(validate(HFamily{4, 8, 3}), InvalidParameters);
  EXPECT_THROW(validate(FFamily{0, 1, 3}), InvalidParameters);
  EXPECT_THROW(validate(F1Family{1, 1}), InvalidParameters);
  EXPECT_THROW(validate(K2Matching{5}), InvalidParameters);
  EXPECT_THROW(validate(K3Matching{6}), InvalidParameters);
  EXPECT_THROW(validate(K2StarMatching{1, 4}), InvalidParameters);
  EXPECT_THROW(build_family(K1Matching{2}), InvalidParameters);
  EXPECT_NO_THROW(validate(K2StarMatching{1, 5}));
}

TEST(Bounds, CycleBounds) {
  EXPECT_EQ(max_cycle_bound(HFamily{10, 8, 3}, 3), 7);
  EXPECT_EQ(max_cycle_bound(FFamily{1, 1, 3}, 3), 7);
  EXPECT_EQ(max_cycle_bound(F1Family{2, 5}, 5), 11);
  EXPECT_EQ(max_cycle_bound(K2Matching{7}, 3), 7);
  EXPECT_EQ(max_cycle_bound(K3Matching{7}, 4), 9);
}

TEST(Bounds, OracleCircumference) {
  EXPECT_EQ(oracle::circumference(build_family(HFamily{10, 8, 3}).graph).length, 7);
  EXPECT_EQ(oracle::circumference(build_family(FFamily{1, 1, 3}).graph).length, 7);
  EXPECT_EQ(oracle::circumference(build_family(F1Family{2, 5}).graph).length, 11);
}

TEST(Bounds, PathBoundsHoldOnSmallHosts) {
  const std::vector<FamilySpec> specs = {HFamily{8, 7, 3},   HFamily{10, 8, 3}, FFamily{1, 2, 3},
                                         F1Family{1, 3},     K1Cliques{1, 2},   K1Cliques{2, 2},
                                         JoinedCenters{1, 1, 2}, K1Matching{7}, K1StarMatching{2, 4},
                                         K2Matching{7}};
  for (const auto& spec : specs) {
    const Graph g = build_family(spec).graph;
    EXPECT_LE(oracle::longest_path_order(g).order, max_path_order_bound(spec)) << describe(spec);
  }
}

TEST(Roles, RoundTrip) {
  for (const char* text : {"A/0", "B/12", "C/3", "apex/x", "apex/y", "apex/z", "s/2/1", "s/single",
                           "t/0/4", "apex/u", "apex/v", "cl/1/2", "big/0", "single", "apex/3", "m/5",
                           "star/center", "star/leaf/2"}) {
    EXPECT_EQ(format_role(parse_role(text)), text);
  }
  for (const char* bad : {"", "A", "A/-1", "Q/1", "apex/w", "s/1", "star/leaf", "A/1/2", "B/x"}) {
    EXPECT_THROW(parse_role(bad), ParseError) << bad;
  }
}

TEST(Embedding, IdentityOfH883) {
  const auto h = build_family(HFamily{8, 8, 3});
  EXPECT_TRUE(check_embedding(h.graph, {HFamily{8, 8, 3}, h.roles}));
}

TEST(Embedding, AdjacentBRolesRejected) {
  const Graph c4 = graphs::cycle(4);
  Embedding e{HFamily{8, 8, 3},
              {parse_role("B/0"), parse_role("B/1"), parse_role("A/0"), parse_role("A/1")}};
  const auto r = check_embedding(c4, e);
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.diagnostic.empty());
}

TEST(Embedding, ApexTriangleOfF) {
  Embedding e{FFamily{1, 1, 3}, {parse_role("apex/x"), parse_role("apex/y"), parse_role("apex/z")}};
  EXPECT_TRUE(check_embedding(graphs::complete(3), e));
}

TEST(Embedding, RejectsNonInjectiveAndForeignRoles) {
  const Graph p = graphs::path(2);
  EXPECT_FALSE(check_embedding(p, {HFamily{8, 8, 3}, {parse_role("A/0"), parse_role("A/0")}}));
  EXPECT_FALSE(check_embedding(p, {HFamily{8, 8, 3}, {parse_role("A/0"), parse_role("A/3")}}));
  EXPECT_FALSE(check_embedding(p, {HFamily{8, 8, 3}, {parse_role("A/0"), parse_role("apex/x")}}));
  EXPECT_FALSE(check_embedding(p, {HFamily{8, 8, 3}, {parse_role("A/0")}}));
  EXPECT_FALSE(check_embedding(p, {HFamily{8, 8, 0}, {parse_role("A/0"), parse_role("A/1")}}));
}

TEST(Names, Describe) {
  EXPECT_EQ(describe(HFamily{8, 8, 3}), "H{8,8,3}");
  EXPECT_EQ(family_name(K1StarMatching{1, 5}), "K1SM");
  EXPECT_TRUE(is_path_family(JoinedCenters{1, 1, 2}));
  EXPECT_FALSE(is_path_family(K2Matching{6}));
}

}  // namespace
}  // namespace cyclestab
