#include <gtest/gtest.h>

#include "cyclestab/certificate.hpp"
#include "cyclestab/decide.hpp"
#include "cyclestab/error.hpp"
#include "cyclestab/families.hpp"
#include "cyclestab/graphs.hpp"
#include "cyclestab/harness.hpp"
#include "cyclestab/oracle.hpp"
#include "util.hpp"

namespace cyclestab {
namespace {

TEST(DecideExact, FamilyMemberIsT0) {
  const Graph g = build_family(HFamily{12, 8, 3}).graph;
  const Decision d = decide_exact(g, 3);
  EXPECT_EQ(d.verdict, Verdict::T0);
  EXPECT_EQ(d.threshold, 8);
  EXPECT_EQ(d.problem, Problem::Cycle);
  ASSERT_TRUE(std::holds_alternative<Embedding>(d.evidence));
  EXPECT_TRUE(std::holds_alternative<HFamily>(std::get<Embedding>(d.evidence).spec));
  EXPECT_TRUE(check_certificate(g, d).ok);
}

TEST(DecideExact, PetersenIsT1) {
  const Decision d = decide_exact(graphs::petersen(), 3);
  EXPECT_EQ(d.verdict, Verdict::T1);
  ASSERT_TRUE(std::holds_alternative<CycleWitness>(d.evidence));
  EXPECT_GE(std::get<CycleWitness>(d.evidence).length(), 8);
  EXPECT_TRUE(check_certificate(graphs::petersen(), d).ok);
}

TEST(DecideExact, K66HasHamiltonCycle) {
  const Graph g = graphs::complete_bipartite(6, 6);
  const Decision d = decide_exact(g, 5);
  EXPECT_EQ(d.verdict, Verdict::T1);
  ASSERT_TRUE(std::holds_alternative<CycleWitness>(d.evidence));
  EXPECT_EQ(std::get<CycleWitness>(d.evidence).length(), 12);
}

TEST(DecideExact, VerdictOnlyOmitsWitness) {
  DecideOptions o;
  o.want_witness = false;
  const Decision d = decide_exact(graphs::petersen(), 3, o);
  EXPECT_EQ(d.verdict, Verdict::T1);
  EXPECT_TRUE(std::holds_alternative<std::monostate>(d.evidence));
}

TEST(DecideExact, RejectsOutsideDomain) {
  EXPECT_THROW(decide_exact(graphs::petersen(), 4), PreconditionError);
  EXPECT_THROW(decide_exact(graphs::complete_bipartite(3, 4), 3), PreconditionError);
  EXPECT_THROW(decide_exact(graphs::path(9), 1), PreconditionError);
}

TEST(DecideFast, K66FiresAtDegreeScreen) {
  const Decision d = decide_fast(graphs::complete_bipartite(6, 6), 5);
  EXPECT_EQ(d.verdict, Verdict::T1);
  EXPECT_EQ(d.mode, Mode::Fast);
}

TEST(DecideFast, F1ViaTwoHighNeighbors) {
  const Graph g = build_family(F1Family{3, 5}).graph;
  const Decision d = decide_fast(g, 5);
  EXPECT_EQ(d.verdict, Verdict::T0);
  ASSERT_TRUE(std::holds_alternative<Embedding>(d.evidence));
  EXPECT_TRUE(std::holds_alternative<F1Family>(std::get<Embedding>(d.evidence).spec));
  EXPECT_TRUE(check_certificate(g, d).ok);
}

TEST(DecideFast, LargeHMemberWithinLinearWork) {
  const Vertex n = 100000, k = 5;
  const Graph g = build_family(HFamily{n, 12, k}).graph;
  const Decision d = decide_fast(g, k);
  EXPECT_EQ(d.verdict, Verdict::T0);
  EXPECT_LE(d.work, 8ull * k * n);
}

TEST(DecideFast, RequiresKAtLeastFive) {
  EXPECT_THROW(decide_fast(graphs::petersen(), 3), PreconditionError);
}

TEST(DecideFast, AgreesWithExactOnSamples) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Vertex k = 5 + static_cast<Vertex>(seed % 2);
    const Vertex n = 2 * k + 2 + static_cast<Vertex>(seed % 9);
    const Graph g = harness::random_graph_under_preconditions(n, k, seed);
    DecideOptions o;
    o.want_witness = false;
    EXPECT_EQ(decide_fast(g, k).verdict, decide_exact(g, k, o).verdict) << serialize_edge_list(g);
  }
  const std::vector<std::pair<FamilySpec, Vertex>> members = {
      {FFamily{2, 2, 5}, 5}, {FVFamily{2, 6}, 6}, {HFamily{20, 14, 6}, 6}};
  for (const auto& [spec, k] : members) {
    const Graph g = build_family(spec).graph;
    const Decision d = decide_fast(g, k);
    EXPECT_EQ(d.verdict, Verdict::T0) << describe(spec);
    EXPECT_TRUE(check_certificate(g, d).ok) << describe(spec);
  }
}

TEST(MinCircumference, SmallOrderShortcut) {
  const Decision d = solve_min_circumference(graphs::complete(5));
  EXPECT_EQ(d.verdict, Verdict::T1);
  EXPECT_EQ(d.problem, Problem::MinCircumference);
  EXPECT_EQ(d.threshold, 5);
}

TEST(MinCircumference, HamiltonicityBoundary) {
  const Graph k34 = graphs::complete_bipartite(3, 4);
  const Decision d = solve_min_circumference(k34);
  EXPECT_EQ(d.verdict, Verdict::T0);
  EXPECT_EQ(d.k, 3);
  EXPECT_EQ(d.threshold, 7);
  ASSERT_TRUE(std::holds_alternative<Embedding>(d.evidence));
  EXPECT_EQ(std::get<HFamily>(std::get<Embedding>(d.evidence).spec), (HFamily{7, 7, 3}));
  EXPECT_TRUE(check_certificate(k34, d).ok);
}

TEST(MinCircumference, Petersen) {
  const Decision d = solve_min_circumference(graphs::petersen());
  EXPECT_EQ(d.verdict, Verdict::T1);
  EXPECT_EQ(d.threshold, 8);
  ASSERT_TRUE(std::holds_alternative<CycleWitness>(d.evidence));
  EXPECT_TRUE(check_certificate(graphs::petersen(), d).ok);
}

TEST(MinCircumference, RejectsNonBiconnected) {
  EXPECT_THROW(solve_min_circumference(graphs::path(5)), PreconditionError);
}

TEST(Certify, Examples) {
  const Decision p = certify(graphs::petersen(), 3, true);
  EXPECT_EQ(p.verdict, Verdict::T1);
  EXPECT_GE(std::get<CycleWitness>(p.evidence).length(), 8);

  const Graph f = build_family(FFamily{1, 1, 3}).graph;
  const Decision e = certify(f, 3, true);
  EXPECT_EQ(e.verdict, Verdict::T0);
  EXPECT_TRUE(std::holds_alternative<FFamily>(std::get<Embedding>(e.evidence).spec));

  const Graph h = build_family(HFamily{50000, 12, 5}).graph;
  const Decision big = certify(h, 5, false);
  EXPECT_EQ(big.mode, Mode::Fast);
  EXPECT_EQ(big.verdict, Verdict::T0);
  EXPECT_EQ(certify(h, 5, false, ModeChoice::Exact).mode, Mode::Exact);
}

TEST(Names, ToString) {
  EXPECT_EQ(to_string(Verdict::T0), "T0");
  EXPECT_EQ(to_string(Mode::Fast), "fast");
  EXPECT_EQ(to_string(Problem::Path), "path");
}

}  // namespace
}  // namespace cyclestab
