#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "iasl/iasl.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir() {
  static std::atomic<int> counter{0};
  fs::path dir = fs::temp_directory_path() / ("iasl_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

std::string fixture(const std::string& name) { return std::string(IASL_FIXTURES) + "/" + name; }

Run run(const std::string& args, const std::string& env = "") {
  fs::path dir = scratch_dir();
  std::string cmd = env + (env.empty() ? "" : " ") + std::string(IASL_CLI) + " " + args + " > " + (dir / "out").string() +
                    " 2> " + (dir / "err").string();
  int raw = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(dir / "out");
  r.err = slurp(dir / "err");
  fs::remove_all(dir);
  return r;
}

std::string inputs(const std::string& graph, const std::string& labeling) {
  return "-g " + fixture(graph) + " -l " + fixture(labeling);
}

TEST(CliTest, DeriveK2Row) {
  auto r = run("derive " + inputs("k2.graph", "k2.lab"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("u v : {0,1,2,3} +\n"), std::string::npos);
}

TEST(CliTest, CheckBalanceAllPositiveTriangle) {
  auto r = run("check balance " + inputs("triangle.graph", "triangle_balanced.lab"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("BALANCED=true"), std::string::npos);
  EXPECT_NE(r.out.find("METHOD=oracle"), std::string::npos);

  auto fast = run("check balance --fast " + inputs("triangle.graph", "triangle_balanced.lab"));
  EXPECT_EQ(fast.status, 0);
  EXPECT_NE(fast.out.find("METHOD=fast\nBALANCED=true"), std::string::npos);
}

TEST(CliTest, CheckFailuresExitOne) {
  auto bal = run("check balance " + inputs("triangle.graph", "triangle_one_negative.lab"));
  EXPECT_EQ(bal.status, 1);
  EXPECT_NE(bal.out.find("BALANCED=false"), std::string::npos);
  auto cl = run("check cluster " + inputs("triangle.graph", "triangle_one_negative.lab"));
  EXPECT_EQ(cl.status, 1);
  EXPECT_NE(cl.out.find("CLUSTERABLE=false"), std::string::npos);
  auto aiasl = run("check aiasl " + inputs("k2.graph", "k2_not_ap.lab"));
  EXPECT_EQ(aiasl.status, 1);
  EXPECT_NE(aiasl.out.find("VERTEX_NOT_AP"), std::string::npos);
  EXPECT_EQ(run("check aiasl " + inputs("k2.graph", "k2.lab")).status, 0);
  EXPECT_EQ(run("check iasi " + inputs("triangle.graph", "triangle_balanced.lab")).status, 0);
}

TEST(CliTest, InputErrorsExitTwo) {
  auto empty = run("derive " + inputs("triangle.graph", "empty_label.lab"));
  EXPECT_EQ(empty.status, 2);
  EXPECT_NE(empty.err.find("EMPTY_LABEL"), std::string::npos);
  EXPECT_NE(empty.err.find("line 2"), std::string::npos);

  auto unknown = run("derive " + inputs("triangle.graph", "unknown_vertex.lab"));
  EXPECT_EQ(unknown.status, 2);
  EXPECT_NE(unknown.err.find("UNKNOWN_VERTEX"), std::string::npos);

  auto malformed = run("derive " + inputs("malformed.graph", "k2.lab"));
  EXPECT_EQ(malformed.status, 2);
  EXPECT_NE(malformed.err.find("PARSE_ERROR"), std::string::npos);
  EXPECT_NE(malformed.err.find("line 2"), std::string::npos);

  EXPECT_EQ(run("derive -g " + fixture("missing.graph") + " -l " + fixture("k2.lab")).status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("check planarity " + inputs("k2.graph", "k2.lab")).status, 2);
  EXPECT_EQ(run("verify --theorem NOPE --family triangle").status, 2);
  EXPECT_EQ(run("transform homeo " + inputs("triangle.graph", "triangle_balanced.lab") + " --vertex u").status, 2);
}

TEST(CliTest, BoundExceededExitsThree) {
  EXPECT_EQ(run("check balance --cycle-bound 2 " + inputs("triangle.graph", "triangle_balanced.lab")).status, 3);
  EXPECT_EQ(run("check balance " + inputs("triangle.graph", "triangle_balanced.lab"), "IASL_CYCLE_BOUND=2").status, 3);
  EXPECT_EQ(run("enumerate -g " + fixture("c4.graph") + " --max-vertices 3").status, 3);
  EXPECT_EQ(run("verify --theorem BALANCE_BIPARTITE_REV --family connected:9").status, 3);
}

TEST(CliTest, EnumerateK2) {
  auto r = run("enumerate -g " + fixture("k2.graph") + " --universe-max 1 --max-label-size 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("COUNT=6\n"), std::string::npos);
  EXPECT_NE(r.out.find("u={0} v={1}\n"), std::string::npos);
  auto limited = run("enumerate -g " + fixture("k2.graph") + " --universe-max 1 --max-label-size 2 --limit 2");
  EXPECT_EQ(std::count(limited.out.begin(), limited.out.end(), '\n'), 3);
}

TEST(CliTest, VerifyTriangleReverse) {
  auto r = run("verify --theorem BALANCE_BIPARTITE_REV --family triangle --universe-max 8 --max-label-size 3");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("verdict = COUNTEREXAMPLE_FOUND"), std::string::npos);
  auto ces = iasl::read_counterexamples(r.out);
  ASSERT_FALSE(ces.empty());
  EXPECT_TRUE(iasl::replay_counterexample(iasl::TheoremId::BalanceBipartiteRev, ces.front()));

  auto odd = run("verify --theorem BALANCE_BIPARTITE_REV --family triangle --universe-max 8 --max-label-size 3 "
                 "--odd-ratio-only");
  EXPECT_EQ(odd.status, 0);
  EXPECT_NE(odd.out.find("verdict = CONFIRMED_WITHIN_BOUNDS"), std::string::npos);
}

TEST(CliTest, ConstructAndNotBipartite) {
  auto r = run("construct -g " + fixture("c4.graph"));
  EXPECT_EQ(r.status, 0);
  auto f = iasl::parse_labeling(r.out);
  EXPECT_EQ(f.assignment.size(), 4u);
  EXPECT_EQ(run("construct -g " + fixture("triangle.graph")).status, 1);
}

TEST(CliTest, TransformOutputsRoundTrip) {
  fs::path dir = scratch_dir();
  std::string gout = (dir / "g.txt").string(), lout = (dir / "l.txt").string();
  auto r = run("transform subdivide " + inputs("triangle.graph", "triangle_balanced.lab") +
               " --edge u:v --new-vertex x --graph-out " + gout + " --labeling-out " + lout);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("# balanced false"), std::string::npos);
  iasl::Graph g = iasl::parse_edge_list(slurp(gout));
  iasl::Labeling f = iasl::parse_labeling(slurp(lout));
  auto bundle = iasl::parse_bundle(r.out);
  EXPECT_EQ(g, bundle.graph);
  EXPECT_EQ(f, bundle.labeling);
  EXPECT_EQ(f.assignment.at("x"), (iasl::IntegerSet{0, 1, 2, 3}));
  // Feeding the outputs back in reproduces the same table.
  auto again = run("check balance -g " + gout + " -l " + lout);
  EXPECT_EQ(again.status, 1);
  fs::remove_all(dir);

  auto span = run("transform span " + inputs("triangle.graph", "triangle_one_negative.lab") + " --edge v:w --edge u:w");
  EXPECT_EQ(span.status, 0);
  EXPECT_NE(span.out.find("# removed_negative_edges 1"), std::string::npos);
  auto homeo = run("transform homeo " + inputs("c4.graph", "c4.lab") + " --vertex b");
  EXPECT_EQ(homeo.status, 0);
  EXPECT_NE(homeo.out.find("# added_edge a c"), std::string::npos);
  auto del = run("transform delete-vertex " + inputs("p4.graph", "p4.lab") + " --vertex d");
  EXPECT_EQ(del.status, 0);
  EXPECT_NE(del.out.find("# removed_vertex d"), std::string::npos);
}

TEST(CliTest, OutputFlagWritesFile) {
  fs::path dir = scratch_dir();
  std::string out = (dir / "table.txt").string();
  auto r = run("-o " + out + " derive " + inputs("k2.graph", "k2.lab"));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(slurp(out).find("u v : {0,1,2,3} +"), std::string::npos);
  fs::remove_all(dir);
}

}  // namespace
