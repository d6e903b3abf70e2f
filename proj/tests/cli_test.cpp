#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dpc/io.hpp"

namespace dpc {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    char tmpl[] = "/tmp/dpc_cli_test_XXXXXX";
    ASSERT_NE(mkdtemp(tmpl), nullptr);
    dir_ = tmpl;
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
    return Path(name);
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, GenPrintsCountsAndWritesFiles) {
  const Result r = Invoke({"gen", "--family", "zeroj", "--j", "1", "--m", "2", "-o", Path("g"), "--cover-out", Path("c")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "family zeroj i 0 j 1 m 2\npredicted n 6 e 7\nactual n 6 e 7\n");
  const GraphFile g = read_graph_file(Path("g"));
  EXPECT_EQ(g.graph.num_vertices(), 6u);
  EXPECT_EQ(read_cover_file(Path("c")).size(), 7u);

  EXPECT_NE(Invoke({"gen", "--family", "equal", "--i", "1", "--m", "2", "-o", Path("e")}).out.find("actual n 6 e 8"),
            std::string::npos);
}

TEST_F(CliTest, GenRangeErrorNamesTheRange) {
  const Result r = Invoke({"gen", "--family", "mid", "--i", "1", "--j", "3", "--m", "1", "-o", Path("g")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("i+2 <= j <= 2i"), std::string::npos) << r.err;
  EXPECT_EQ(Invoke({"gen", "--family", "cubic", "-o", Path("g")}).code, kExitUsage);
}

TEST_F(CliTest, ColorOutputs) {
  const std::string edgeless = Write("edgeless", "graph 3\n");
  const std::string empty = Write("empty", "cover 0\n");
  EXPECT_EQ(Invoke({"color", "--graph", edgeless, "--cover", empty}).out, "v 0 R\nv 1 R\nv 2 R\n");

  Invoke({"gen", "--family", "zeroj", "--j", "1", "--m", "2", "-o", Path("g"), "--cover-out", Path("c")});
  EXPECT_EQ(Invoke({"color", "--graph", Path("g"), "--cover", Path("c"), "--i", "0", "--j", "1"}).out, "UNCOLORABLE\n");

  std::ostringstream even;
  write_cover(even, Cover::all_even(7));
  const Result r = Invoke({"color", "--graph", Path("g"), "--cover", Write("even", even.str()), "--i", "0", "--j", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST_F(CliTest, MalformedInputExitsTwoWithLineNumber) {
  const std::string bad = Write("bad", "graph 2\ne 0 5\n");
  const Result r = Invoke({"colorable", "--graph", bad});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;

  const std::string g = Write("g", "graph 2\ne 0 1\n");
  const std::string c = Write("c", "cover 2\np 0 E\np 1 E\n");
  EXPECT_EQ(Invoke({"color", "--graph", g, "--cover", c}).code, kExitUsage);
  EXPECT_EQ(Invoke({"color", "--graph", Path("missing"), "--cover", c}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({}).code, kExitUsage);
}

TEST_F(CliTest, HelpExitsZero) {
  const Result r = Invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Exit codes"), std::string::npos);
}

TEST_F(CliTest, BudgetErrorsExitTwo) {
  const std::string triple = Write("t", "graph 2\ne 0 1\ne 0 1\ne 0 1\n");
  const Result r = Invoke({"colorable", "--graph", triple, "--i", "0", "--j", "1", "--max-covers", "4"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
  EXPECT_EQ(Invoke({"colorable", "--graph", triple, "--i", "0", "--j", "1", "--max-covers", "8"}).code, kExitOk);
}

TEST_F(CliTest, AnalysisCommands) {
  const std::string triple = Write("t", "graph 2\ne 0 1\ne 0 1\ne 0 1\n");
  EXPECT_EQ(Invoke({"colorable", "--graph", triple, "--i", "0", "--j", "1"}).out,
            "colorable no\nwitness 1\ncover 3\np 0 E\np 1 E\np 2 O\n");
  EXPECT_EQ(Invoke({"critical", "--graph", triple, "--i", "0", "--j", "1"}).out,
            "critical yes\nn 2\nedges 3\nbound 3/1\nholds yes\nsharp yes\npotential -1\nthreshold -1\n"
            "potential-holds yes\n");
  EXPECT_EQ(Invoke({"potential", "--graph", triple, "--i", "0", "--j", "1"}).out, "rho -1\nargmin 0 1\nthreshold -1\n");
  EXPECT_EQ(Invoke({"sparsity", "--graph", triple, "--i", "0", "--j", "1"}).out, "guarantee no\n");
  const std::string edge = Write("e", "graph 2\ne 0 1\n");
  EXPECT_EQ(Invoke({"sparsity", "--graph", edge, "--i", "0", "--j", "1", "--check"}).out,
            "guarantee yes\ncolorable yes\n");
  EXPECT_EQ(Invoke({"fdp", "--i", "0", "--j", "1", "--n", "2", "--max-edges", "4"}).out,
            "fdp 3\ngraph 2\ne 0 1\ne 0 1\ne 0 1\n");
  EXPECT_EQ(Invoke({"fdp", "--i", "0", "--j", "1", "--n", "2", "--max-edges", "2"}).out, "fdp none\n");
}

TEST_F(CliTest, VerifyGrids) {
  const Result z = Invoke({"verify", "--family", "zeroj", "--j", "1,2", "--m", "1,2"});
  EXPECT_EQ(z.code, kExitOk);
  EXPECT_NE(z.out.find("cells 4 passed 4 failed 0"), std::string::npos) << z.out;
  EXPECT_NE(Invoke({"verify", "--family", "equal", "--i", "1", "--m", "1,2"}).out.find("passed 2 failed 0"),
            std::string::npos);
  EXPECT_NE(Invoke({"verify", "--family", "large", "--i", "1", "--j", "3", "--m", "0,1"}).out.find("passed 2 failed 0"),
            std::string::npos);
  const Result budget = Invoke({"verify", "--family", "equal", "--i", "1", "--m", "2", "--max-covers", "16"});
  EXPECT_EQ(budget.code, kExitOk);
  EXPECT_NE(budget.out.find("budget 1"), std::string::npos) << budget.out;
}

}  // namespace
}  // namespace dpc
