#include <gtest/gtest.h>

#include <json.hpp>

#include "cyclestab/error.hpp"
#include "cyclestab/graphs.hpp"
#include "cyclestab/turan.hpp"
#include "util.hpp"

namespace cyclestab {
namespace {

using namespace turan;

TEST(TuranBound, Values) {
  EXPECT_EQ(turan_bound(8, 2), 8);
  EXPECT_EQ(turan_bound(9, 3), 13);
  EXPECT_EQ(turan_bound(100, 5), 250);
  EXPECT_THROW(turan_bound(7, 3), InvalidParameters);
  EXPECT_THROW(turan_bound(8, 0), InvalidParameters);
}

TEST(CheckForbidden, Examples) {
  const std::vector<Graph> two_c4 = {graphs::cycle(4), graphs::cycle(4)};
  const auto a = check_forbidden(disjoint_union(two_c4), 2);
  EXPECT_FALSE(a.has_star);
  ASSERT_TRUE(a.has_path.has_value());
  EXPECT_FALSE(*a.has_path);

  const auto b = check_forbidden(graphs::star(5), 2);
  EXPECT_TRUE(b.has_star);
  EXPECT_FALSE(b.has_path.value());

  const auto c = check_forbidden(graphs::cycle(5), 2);
  EXPECT_FALSE(c.has_star);
  EXPECT_TRUE(c.has_path.value());
}

TEST(Extremal, EdgeCountAndFreeness) {
  for (const auto& [n, k] : std::vector<std::pair<Vertex, Vertex>>{{8, 2}, {9, 3}, {11, 3}, {10, 4}, {23, 5}}) {
    const Graph g = build_turan_extremal(n, k);
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(static_cast<std::int64_t>(g.size()), turan_bound(n, k)) << n << "," << k;
    const auto f = check_forbidden(g, k);
    EXPECT_FALSE(f.has_star) << n << "," << k;
    EXPECT_FALSE(f.has_path.value_or(true)) << n << "," << k;
    EXPECT_TRUE(components_bound_check(g, k)) << n << "," << k;
  }
}

TEST(Extremal, TenFourIsFourRegular) {
  const Graph g = build_turan_extremal(10, 4);
  EXPECT_EQ(g.size(), 20u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 4);
}

TEST(Verify, SmallCasesPass) {
  VerifyOptions o;
  o.samples = 200;
  for (const auto& [n, k] : std::vector<std::pair<Vertex, Vertex>>{{6, 2}, {8, 2}, {8, 3}}) {
    const TuranReport r = verify_turan(n, k, o);
    EXPECT_TRUE(r.pass) << r.to_json();
    EXPECT_EQ(r.search_counterexamples, 0u);
    EXPECT_EQ(r.sample_violations, 0u);
    EXPECT_EQ(r.samples, 200u);
    EXPECT_TRUE(r.extremal_forbidden_free);
    if (r.census_complete) EXPECT_EQ(r.census_max_free_edges, r.bound);
  }
}

TEST(Verify, ReportJson) {
  VerifyOptions o;
  o.samples = 10;
  const auto j = nlohmann::json::parse(verify_turan(6, 2, o).to_json());
  EXPECT_EQ(j.at("n"), 6);
  EXPECT_EQ(j.at("bound"), 6);
  EXPECT_TRUE(j.at("pass").get<bool>());
}

TEST(Verify, BudgetExceeded) {
  VerifyOptions o;
  o.subset_budget = 10;
  EXPECT_THROW(verify_turan(8, 2, o), Error);
}

TEST(ComponentsBound, Preconditions) {
  const std::vector<Graph> parts = {graphs::cycle(4), graphs::cycle(4)};
  EXPECT_TRUE(components_bound_check(disjoint_union(parts), 2));
  EXPECT_THROW(components_bound_check(graphs::cycle(8), 2), PreconditionError);
  EXPECT_THROW(components_bound_check(graphs::path(8), 2), PreconditionError);
}

}  // namespace
}  // namespace cyclestab
