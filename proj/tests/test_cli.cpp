#include "sachs/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

auto run(std::vector<std::string> args) -> Outcome {
  std::ostringstream out, err;
  int code = sachs::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

auto temp_file(const std::string &name, const std::string &content) -> std::string {
  auto path = std::filesystem::temp_directory_path() / ("sachs_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

auto json(const Outcome &o) { return nlohmann::ordered_json::parse(o.out); }

const std::string c4_text = "4 4\n0 1\n1 2\n2 3\n0 3\n";

}  // namespace

TEST(Cli, A4OnSquare) {
  auto o = run({"a4", "--graph", temp_file("c4.el", c4_text)});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(json(o).dump(), R"({"a4":0,"m2":2,"c4":1})");
}

TEST(Cli, CoeffsAndMatchings) {
  auto path = temp_file("c4b.el", c4_text);
  auto o = run({"coeffs", "--graph", path});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(json(o)["coeffs"].dump(), "[1,0,-4,0,0]");
  EXPECT_EQ(json(o)["sachs_agrees"], true);
  o = run({"matchings", "--graph", path, "--k", "2"});
  EXPECT_EQ(json(o)["count"], 2);
  o = run({"matchings", "--graph", path});
  EXPECT_EQ(json(o)["matchings"].dump(), "[1,4,2]");
}

TEST(Cli, Graph6Input) {
  auto o = run({"a4", "--graph", temp_file("c4.g6", "Cl\n"), "--format", "graph6"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(json(o)["c4"], 1);
}

TEST(Cli, DifferenceReport) {
  auto o = run({"difference", "--ev", "2,2;1,1"});
  EXPECT_EQ(o.code, 0);
  auto j = json(o);
  EXPECT_EQ(j["young_rows"].dump(), "[2,2,1,1]");
  EXPECT_EQ(j["characteristic_matrix"].dump(), "[[2,2],[2,0]]");
  EXPECT_EQ(j["a4"].dump(),
            R"({"blocks":4,"characteristic_matrix":4,"row_sums":4,"direct":4})");
  o = run({"difference", "--rows", "3,2,1"});
  EXPECT_EQ(json(o)["eigenvector"], "1,1,1;1,1,1");
  o = run({"difference", "--graph", temp_file("c4c.el", c4_text)});
  EXPECT_EQ(json(o)["eigenvector"], "2;2");
}

TEST(Cli, SearchSixSix) {
  auto o = run({"search", "--n", "6", "--m", "6", "--mode", "all"});
  EXPECT_EQ(o.code, 1);
  auto j = json(o);
  EXPECT_EQ(j["brute_min"], 4);
  EXPECT_EQ(j["difference_min"], 4);
  EXPECT_EQ(j["partition"]["min"], 4);
  EXPECT_EQ(j["paper_value"], 2);
  EXPECT_EQ(j["discrepancy"], true);
  EXPECT_FALSE(j.contains("timing_ms"));
  o = run({"search", "--n", "6", "--m", "6", "--timing"});
  EXPECT_TRUE(json(o).contains("timing_ms"));
}

TEST(Cli, SearchCsv) {
  auto o = run({"search", "--n", "6", "--m", "8", "--csv"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, sachs::csv_header() +
                       "6,8,0,0,0,0,complete_bipartite,0,,false,true,true,true\n");
}

TEST(Cli, PartitionAndObjective) {
  auto o = run({"partition", "--n", "7", "--m", "8"});
  EXPECT_EQ(json(o)["partition"].dump(), R"({"min":6,"argmin":["2,2,2,1,1"]})");
  o = run({"partition", "--rows", "3,2,1"});
  EXPECT_EQ(json(o)["objective"], 5);
}

TEST(Cli, CompressAndCorners) {
  auto p5 = temp_file("p5.el", "5 4\n0 1\n1 2\n2 3\n3 4\n");
  auto o = run({"compress", "--graph", p5, "--from", "1", "--to", "3", "--k", "2"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(json(o)["matchings"][1]["after"], 2);
  o = run({"corners", "--rows", "3,1,1"});
  auto j = json(o);
  EXPECT_EQ(j["out_corners"].dump(), "[[1,3],[3,1]]");
  EXPECT_EQ(j["in_corners"].dump(), "[[2,2]]");
  o = run({"corners", "--audit", "--n-max", "6"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(json(o)["coefficient"], "a4");
}

TEST(Cli, VerifyExitCodeAndDeterminism) {
  auto a = run({"verify", "--n-min", "5", "--n-max", "7", "--jobs", "3"});
  auto b = run({"verify", "--n-min", "5", "--n-max", "7", "--jobs", "1"});
  EXPECT_EQ(a.code, 1);
  EXPECT_EQ(a.out, b.out);
  auto c = run({"verify", "--n-min", "5", "--n-max", "5"});
  EXPECT_EQ(json(c)["discrepancies"], 1);
  // brute mode still compares against the closed forms
  auto d = run({"verify", "--n-min", "8", "--n-max", "8", "--mode", "brute"});
  EXPECT_EQ(d.code, 1);
  auto e = run({"verify", "--n-min", "2", "--n-max", "4"});
  EXPECT_EQ(e.code, 0);
}

TEST(Cli, OutFile) {
  auto path = (std::filesystem::temp_directory_path() / "sachs_cli_out.json").string();
  auto o = run({"search", "--n", "6", "--m", "9", "--out", path});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(buf.str())["min_a4"], 0);
}

TEST(Cli, FuzzNeedsSeedAndIsReproducible) {
  EXPECT_EQ(run({"fuzz"}).code, 2);
  auto a = run({"fuzz", "--seed", "5", "--count", "50"});
  auto b = run({"fuzz", "--seed", "5", "--count", "50"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = run({"fuzz", "--seed", "5", "--count", "30", "--target", "coefficients"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(json(c)["mismatches"].size(), 0u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"search", "--n", "6"}).code, 2);
  EXPECT_EQ(run({"search", "--n", "6", "--m", "6", "--mode", "fast"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"a4", "--graph", temp_file("bad.el", "3 1\n0 7\n")}).code, 3);
  EXPECT_EQ(run({"a4", "--graph", temp_file("loop.el", "3 1\n1 1\n")}).code, 3);
  EXPECT_EQ(run({"difference", "--ev", "1,2;3"}).code, 3);
  EXPECT_EQ(run({"difference", "--graph", temp_file("p5b.el", "5 4\n0 1\n1 2\n2 3\n3 4\n")}).code, 3);
  EXPECT_EQ(run({"search", "--n", "11", "--m", "20", "--mode", "brute"}).code, 4);
  EXPECT_EQ(run({"search", "--n", "11", "--m", "20", "--mode", "difference"}).code, 0);
  EXPECT_EQ(run({"corners", "--rows", "3,1,1", "--audit"}).code, 2);
}

TEST(Cli, ScaleGuardFromEnvironment) {
  ::setenv("SACHS_MAX_N", "11", 1);
  auto o = run({"search", "--n", "11", "--m", "20", "--mode", "brute"});
  ::unsetenv("SACHS_MAX_N");
  EXPECT_NE(o.code, 4);
  ::setenv("SACHS_MAX_N", "ten", 1);
  EXPECT_EQ(run({"search", "--n", "6", "--m", "6"}).code, 3);
  ::unsetenv("SACHS_MAX_N");
}
