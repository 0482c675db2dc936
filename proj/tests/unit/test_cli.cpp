#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "cyclestab/families.hpp"
#include "cyclestab/graphs.hpp"

namespace cyclestab {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cyclestab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, DecidePetersen) {
  const auto g = file("p.txt", serialize_edge_list(graphs::petersen()));
  const auto r = run({"decide", "--input", g, "--k", "3", "--json"});
  EXPECT_EQ(r.code, cli::kExitT1) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "T1");
  EXPECT_EQ(j.at("evidence").at("kind"), "cycle");
}

TEST_F(Cli, DecideFamilyMemberAndCheck) {
  const auto g = file("h.txt", serialize_edge_list(build_family(HFamily{12, 8, 3}).graph));
  const auto r = run({"decide", "-i", g, "--k", "3", "--json"});
  EXPECT_EQ(r.code, cli::kExitT0);
  const auto cert = file("cert.json", r.out);
  const auto c = run({"check", "-c", cert, "-g", g});
  EXPECT_EQ(c.code, 0) << c.out << c.err;

  json bad = json::parse(r.out);
  bad["threshold"] = 9;
  const auto bad_cert = file("bad.json", bad.dump());
  EXPECT_EQ(run({"check", "-c", bad_cert, "-g", g}).code, 1);
}

TEST_F(Cli, PlainDecideOutput) {
  const auto g = file("c.txt", serialize_edge_list(graphs::complete_bipartite(3, 4)));
  const auto r = run({"decide", "-i", g, "--min-form"});
  EXPECT_EQ(r.code, cli::kExitT0) << r.err;
  EXPECT_NE(r.out.find("T0"), std::string::npos);
  // n = 7 < 2k + 2 for the cycle problem.
  EXPECT_EQ(run({"decide", "-i", g, "--k", "3"}).code, cli::kExitError);
}

TEST_F(Cli, PathDecide) {
  const auto g = file("c7.txt", serialize_edge_list(graphs::cycle(7)));
  EXPECT_EQ(run({"path-decide", "-i", g, "--k", "2"}).code, cli::kExitT1);
  const auto h = file("k1.txt", serialize_edge_list(build_family(K1Cliques{1, 2}).graph));
  EXPECT_EQ(run({"path-decide", "-i", h, "--k", "2"}).code, cli::kExitT0);
}

TEST_F(Cli, Oracle) {
  const auto g = file("p.txt", serialize_edge_list(graphs::petersen()));
  const auto r = run({"oracle", "-i", g, "--circumference", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("9"), std::string::npos);
}

TEST_F(Cli, GenRoundTrip) {
  const auto out = path("gen.txt");
  ASSERT_EQ(run({"gen", "--family", "H", "--n", "10", "--ell", "8", "--a", "3", "--out", out}).code, 0);
  EXPECT_EQ(read_graph_file(out), build_family(HFamily{10, 8, 3}).graph);
  const auto r = run({"gen", "--family", "random", "--n", "14", "--k", "3", "--seed", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_graph(r.out).order(), 14);
  EXPECT_EQ(run({"gen", "--family", "H", "--n", "10", "--ell", "3", "--a", "3"}).code, cli::kExitError);
}

TEST_F(Cli, Turan) {
  const auto r = run({"turan", "--n", "8", "--k", "2", "--verify", "--samples", "50"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  const auto c = run({"turan", "--n", "9", "--k", "3", "--construct"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(parse_graph(c.out).size(), 13u);
}

TEST_F(Cli, VerifyWritesReport) {
  const auto out = path("report.json");
  const auto r = run({"verify", "families", "--out", out});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(out);
  const json j = json::parse(in);
  EXPECT_EQ(j.at("campaign"), "families");
  EXPECT_TRUE(j.at("violations").empty());
  EXPECT_EQ(run({"verify", "theorem16", "--max-n", "6", "--fault-period", "3"}).code, 1);
}

TEST_F(Cli, Errors) {
  EXPECT_EQ(run({"decide", "-i", path("missing.txt"), "--k", "3"}).code, cli::kExitError);
  EXPECT_EQ(run({"bogus"}).code, cli::kExitError);
  EXPECT_EQ(run({}).code, cli::kExitError);
  const auto g = file("path.txt", serialize_edge_list(graphs::path(8)));
  const auto r = run({"decide", "-i", g, "--k", "2"});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("error"), std::string::npos);
  const auto bad = file("bad.txt", "3 2\n0 1\n1 1\n");
  EXPECT_EQ(run({"decide", "-i", bad, "--k", "1"}).code, cli::kExitError);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace cyclestab
