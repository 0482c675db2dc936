#include <gtest/gtest.h>

#include "cyclestab/error.hpp"
#include "cyclestab/families.hpp"
#include "cyclestab/graphs.hpp"
#include "cyclestab/recognize.hpp"
#include "util.hpp"

namespace cyclestab {
namespace {

TEST(Preconditions, Petersen) {
  const auto r = check_preconditions(graphs::petersen(), 3);
  EXPECT_TRUE(r.biconnected);
  EXPECT_EQ(r.k_max, 3);
  EXPECT_FALSE(r.exceptional_vertex.has_value());
  EXPECT_TRUE(r.degree_condition());
  EXPECT_FALSE(check_preconditions(graphs::petersen(), 4).degree_condition());
}

TEST(Preconditions, FSingletonIsExceptional) {
  const auto f = build_family(FFamily{1, 1, 3});
  const auto r = check_preconditions(f.graph, 3);
  EXPECT_TRUE(r.biconnected);
  EXPECT_EQ(r.k_max, 3);
  ASSERT_TRUE(r.exceptional_vertex.has_value());
  EXPECT_EQ(format_role(f.roles[*r.exceptional_vertex]), "s/single");
  EXPECT_EQ(f.graph.degree(*r.exceptional_vertex), 2);
}

TEST(Preconditions, PathIsNotBiconnected) {
  const auto r = check_preconditions(graphs::path(5), 2);
  EXPECT_FALSE(r.biconnected);
  EXPECT_THROW(require_cycle_domain(r, 2, 1), PreconditionError);
}

TEST(Preconditions, RequireCycleDomain) {
  const auto ok = check_preconditions(graphs::petersen(), 3);
  EXPECT_NO_THROW(require_cycle_domain(ok, 2, 8));
  EXPECT_THROW(require_cycle_domain(ok, 2, 11), PreconditionError);
  EXPECT_THROW(require_cycle_domain(check_preconditions(graphs::petersen(), 4), 2, 8), PreconditionError);
  EXPECT_THROW(require_cycle_domain(check_preconditions(graphs::cycle(8), 1), 2, 4), PreconditionError);
}

TEST(Seeds, DegreeExactlyK) {
  const auto h = build_family(HFamily{10, 8, 3});
  const auto seeds = degree_seeds(h.graph, 3);
  ASSERT_EQ(seeds.size(), 5u);
  for (Vertex s : seeds) EXPECT_EQ(h.roles[s].kind, RoleKind::B);
  EXPECT_EQ(degree_seeds(h.graph, 3, 2).size(), 2u);
}

TEST(Recognize, K34IsHamiltonicityBoundaryMember) {
  const Graph k34 = graphs::complete_bipartite(3, 4);
  const auto e = recognize(k34, 3);
  ASSERT_TRUE(e.has_value());
  ASSERT_TRUE(std::holds_alternative<HFamily>(e->spec));
  EXPECT_EQ(std::get<HFamily>(e->spec), (HFamily{7, 7, 3}));
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(e->roles[v].kind, RoleKind::A);
  EXPECT_TRUE(check_embedding(k34, *e));
}

TEST(Recognize, PetersenHasNoEmbedding) {
  EXPECT_FALSE(recognize(graphs::petersen(), 3).has_value());
  EXPECT_FALSE(recognize(graphs::petersen(), 2).has_value());
}

TEST(Recognize, F1MinusApexCliqueEdge) {
  const auto f = build_family(F1Family{2, 5});
  // The K_k vertices have degree k + 1, so one apex edge can go.
  Vertex apex = -1, clique = -1;
  for (Vertex v = 0; v < f.graph.order(); ++v) {
    if (f.roles[v].kind == RoleKind::ApexU) apex = v;
    if (f.roles[v].kind == RoleKind::Big && clique < 0) clique = v;
  }
  const Graph g = without_edge(f.graph, {std::min(apex, clique), std::max(apex, clique)});
  const auto e = recognize(g, 5);
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(std::holds_alternative<F1Family>(e->spec)) << describe(e->spec);
  EXPECT_TRUE(check_embedding(g, *e));
}

TEST(Recognize, EveryCatalogHostIsRecognized) {
  const std::vector<std::pair<FamilySpec, Vertex>> cases = {
      {HFamily{12, 8, 3}, 3}, {HFamily{9, 9, 4}, 4},   {FFamily{1, 1, 3}, 3}, {FFamily{2, 3, 4}, 4},
      {F1Family{1, 3}, 3},    {F1Family{3, 5}, 5},     {FVFamily{2, 4}, 4},   {K2Matching{7}, 3},
      {K2StarMatching{1, 6}, 3}, {K3Matching{7}, 4}, {HFamily{20, 12, 5}, 5}};
  for (const auto& [spec, k] : cases) {
    const Graph g = build_family(spec).graph;
    std::uint64_t work = 0;
    const auto e = recognize(g, k, {}, &work);
    ASSERT_TRUE(e.has_value()) << describe(spec);
    EXPECT_TRUE(check_embedding(g, *e)) << describe(spec);
    EXPECT_LT(max_cycle_bound(e->spec, k), 2 * k + 2) << describe(spec);
    EXPECT_GT(work, 0u);
  }
}

TEST(Recognize, RejectsOutsideDomain) {
  EXPECT_THROW(recognize(graphs::path(6), 2), PreconditionError);
  EXPECT_THROW(recognize(graphs::cycle(6), 1), PreconditionError);
}

TEST(Matchers, IndividualMatchersValidate) {
  const auto h = build_family(HFamily{10, 8, 3});
  const Vertex a[] = {0, 1, 2};
  const auto e = match::h_family(h.graph, a, 8);
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(check_embedding(h.graph, *e));
  const Vertex wrong[] = {0, 1, 3};
  EXPECT_FALSE(match::h_family(h.graph, wrong, 8).has_value());
  const auto k2 = build_family(K2Matching{8});
  ASSERT_TRUE(match::k2m_pair(k2.graph, 0, 1).has_value());
  EXPECT_FALSE(match::k2m_pair(graphs::petersen(), 0, 1).has_value());
}

TEST(Ore, SandwichExamples) {
  const auto w = recognize_ore(graphs::complete_bipartite(3, 4), 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->dominating, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(w->independent.size(), 4u);
  EXPECT_FALSE(recognize_ore(graphs::petersen(), 3).has_value());
  const Graph k3e4 = join(graphs::complete(3), graphs::empty(4));
  EXPECT_TRUE(recognize_ore(k3e4, 3).has_value());
}

}  // namespace
}  // namespace cyclestab
