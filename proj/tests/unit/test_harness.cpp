#include <gtest/gtest.h>

#include <json.hpp>

#include "cyclestab/error.hpp"
#include "cyclestab/graphs.hpp"
#include "cyclestab/harness.hpp"
#include "cyclestab/recognize.hpp"
#include "util.hpp"

namespace cyclestab {
namespace {

using namespace harness;

TEST(Enumerate, Counts) {
  GraphFilter bi;
  bi.biconnected = true;
  EXPECT_EQ(enumerate_graphs(3, bi).size(), 1u);
  EXPECT_EQ(enumerate_graphs(4, bi).size(), 10u);
  EXPECT_EQ(enumerate_graphs(5).size(), 1024u);
  GraphFilter conn;
  conn.connected = true;
  EXPECT_EQ(enumerate_graphs(4, conn).size(), 38u);
  EXPECT_THROW(enumerate_graphs(9), PreconditionError);
}

TEST(Enumerate, ShardsPartitionKeys) {
  GraphFilter bi;
  bi.biconnected = true;
  std::vector<std::uint64_t> all, merged;
  for_each_graph(5, bi, [&](std::uint64_t key, const Graph&) { all.push_back(key); });
  for (unsigned s = 0; s < 3; ++s) {
    for_each_graph(5, bi, [&](std::uint64_t key, const Graph&) {
      EXPECT_EQ(key % 3, s);
      merged.push_back(key);
    }, s, 3);
  }
  std::sort(merged.begin(), merged.end());
  EXPECT_EQ(all, merged);
}

TEST(Enumerate, SortedRepresentativesCoverClasses) {
  // Every biconnected graph on 5 vertices has a degree-sorted relabeling.
  GraphFilter bi;
  bi.biconnected = true;
  std::uint64_t count = 0;
  for_each_sorted_graph(5, 0, bi, [&](std::uint64_t, const Graph& g) {
    for (Vertex v = 1; v < 5; ++v) EXPECT_LE(g.degree(v), g.degree(v - 1));
    ++count;
  });
  // 10 isomorphism classes; sorted labelings can repeat a class but never miss one.
  EXPECT_GE(count, 10u);
  EXPECT_LT(count, enumerate_graphs(5, bi).size());
}

TEST(RandomGraph, DeterministicAndAdmissible) {
  for (const auto& [n, k, seed] : std::vector<std::tuple<Vertex, Vertex, std::uint64_t>>{
           {7, 3, 1}, {12, 3, 2}, {20, 5, 3}, {10000, 5, 7}}) {
    const Graph a = random_graph_under_preconditions(n, k, seed);
    EXPECT_EQ(a, random_graph_under_preconditions(n, k, seed));
    EXPECT_EQ(a.order(), n);
    const auto r = check_preconditions(a, k);
    EXPECT_TRUE(r.biconnected);
    EXPECT_TRUE(r.degree_condition());
  }
  EXPECT_NE(random_graph_under_preconditions(12, 3, 1), random_graph_under_preconditions(12, 3, 2));
  EXPECT_THROW(random_graph_under_preconditions(6, 3, 1), Error);
  EXPECT_THROW(random_graph_under_preconditions(6, 1, 1), Error);
}

TEST(RandomGraph, EdgeDeletionKeepsPreconditions) {
  const Graph g = random_graph_under_preconditions(16, 3, 5);
  const Graph h = delete_random_edges(g, 3, 4, 9);
  EXPECT_LE(h.size(), g.size());
  EXPECT_GE(h.size() + 4, g.size());
  const auto r = check_preconditions(h, 3);
  EXPECT_TRUE(r.biconnected);
  EXPECT_TRUE(r.degree_condition());
}

TEST(Lemma, ConclusionExamples) {
  const std::vector<Graph> a = {graphs::complete(2), graphs::complete(2), graphs::complete(1)};
  const auto c = lemma_2_3_conclusion(join(graphs::complete(2), disjoint_union(a)), 0, 1, 3);
  EXPECT_TRUE(c.holds) << c.detail;
  EXPECT_EQ(c.ell, 2);
  EXPECT_TRUE(c.has_single);

  const std::vector<Graph> b = {graphs::complete(3), graphs::complete(3), graphs::complete(3)};
  const auto d = lemma_2_3_conclusion(join(graphs::complete(2), disjoint_union(b)), 0, 1, 4);
  EXPECT_TRUE(d.holds) << d.detail;
  EXPECT_EQ(d.ell, 3);
  EXPECT_FALSE(d.has_single);

  EXPECT_FALSE(lemma_2_3_conclusion(graphs::petersen(), 0, 1, 3).holds);
}

CampaignConfig small(Vertex n_max) {
  CampaignConfig c;
  c.n_min = 3;
  c.n_max = n_max;
  return c;
}

TEST(Campaigns, SmallRunsPass) {
  for (const std::string name : {"theorem16", "mincirc", "families"}) {
    const auto r = run_campaign(name, small(6));
    EXPECT_TRUE(r.pass()) << name << r.to_json();
    EXPECT_GT(r.instances_checked, 0u) << name;
  }
  CampaignConfig l = small(6);
  l.k_max = 3;
  EXPECT_TRUE(run_campaign("lemma23", l).pass());
  EXPECT_TRUE(run_campaign("theorem33", l).pass());
  CampaignConfig f;
  f.samples = 50;
  f.per_family = 5;
  EXPECT_TRUE(run_campaign("fastexact", f).pass());
  CampaignConfig w;
  w.samples = 100;
  const auto wr = run_campaign("witness", w);
  EXPECT_TRUE(wr.pass()) << wr.to_json();
  CampaignConfig lc;
  lc.samples = 100;
  const auto lr = run_campaign("longcycle", lc);
  EXPECT_TRUE(lr.pass());
  EXPECT_EQ(lr.counters.at("found"), lr.counters.at("eligible"));
  EXPECT_THROW(run_campaign("nope", {}), Error);
}

TEST(Campaigns, JobsDoNotChangeReports) {
  CampaignConfig c = small(6);
  c.all_k = true;
  c.samples = 200;
  c.fault_period = 13;
  const auto one = check_theorem_1_6(c);
  c.jobs = 3;
  const auto three = check_theorem_1_6(c);
  EXPECT_EQ(one.violations, three.violations);
  EXPECT_EQ(one.to_json(false), three.to_json(false));
}

TEST(Campaigns, SeedDeterminism) {
  CampaignConfig c;
  c.samples = 300;
  c.samples_only = true;
  c.seed = 11;
  EXPECT_EQ(check_min_circumference(c).to_json(false), check_min_circumference(c).to_json(false));
  const auto j = nlohmann::json::parse(check_min_circumference(c).to_json());
  EXPECT_EQ(j.at("campaign"), "mincirc");
  EXPECT_EQ(j.at("seed"), 11);
  EXPECT_TRUE(j.contains("wall_time"));
  EXPECT_FALSE(nlohmann::json::parse(check_min_circumference(c).to_json(false)).contains("wall_time"));
}

TEST(Campaigns, FaultInjectionIsDetected) {
  CampaignConfig c = small(6);
  c.fault_period = 7;
  const auto r = check_theorem_1_6(c);
  ASSERT_FALSE(r.pass());
  for (const auto& v : r.violations) {
    EXPECT_TRUE(v.injected);
    EXPECT_FALSE(v.graph.empty());
    EXPECT_FALSE(replay_violation("theorem16", v)) << v.graph;
  }
}

TEST(Replay, CorrectVerdictIsNotAViolation) {
  Violation v;
  v.k = 3;
  v.graph = serialize_edge_list(graphs::petersen());
  EXPECT_FALSE(replay_violation("theorem16", v));
  EXPECT_THROW(replay_violation("families", v), Error);
}

}  // namespace
}  // namespace cyclestab
