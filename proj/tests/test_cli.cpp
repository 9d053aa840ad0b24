// Runs the mstiler binary: argv[1] is its path, argv[2] a scratch directory.
#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

std::string g_cli, g_dir;

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, ReduceOrderTen) {
  CliRun r = run("reduce --order 10 --format json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], 10);
  EXPECT_EQ(j["d1"], 432139);
  EXPECT_EQ(j["dtau"], 92850);
  EXPECT_EQ(j["volume_audit"], "pass");
  std::map<std::string, long> residual;
  for (const auto& e : j["residual"]) {
    EXPECT_EQ(e["order"], 0);
    residual[e["tile"]] = e["count"];
  }
  EXPECT_EQ(residual, (std::map<std::string, long>{{"T1", 1064050}, {"T2", 6341550}, {"T3", 4720730}, {"T4", 1064050}}));
  EXPECT_TRUE(j["volume"].contains("r"));
  EXPECT_TRUE(j["volume"].contains("t"));
}

TEST(Cli, ReduceKeepForm) {
  auto j = nlohmann::json::parse(run("reduce --order 2 --normal-form keep").out);
  EXPECT_EQ(j["d1"], 7);
  EXPECT_EQ(j["dtau"], 0);
}

TEST(Cli, InflateIdentity) {
  CliRun r = run("inflate --matrix M --power 0 --vector 1,0,0,0");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["vector"]["counts"], nlohmann::json::array({1, 0, 0, 0}));
}

TEST(Cli, InflateHatFrequencies) {
  auto j = nlohmann::json::parse(run("inflate --matrix Mhat --power 30 --vector 1,0,0,0").out);
  // Column sums of a high power approach the left PF vector, whose T2 share is one half.
  EXPECT_NEAR(j["vector"]["frequencies"][1].get<double>(), 0.5, 1e-9);
}

TEST(Cli, LatticeAndProject) {
  auto l = nlohmann::json::parse(run("lattice --cell hemi-even").out);
  EXPECT_EQ(l["N"], nlohmann::json::array({32, 240, 640, 640, 252, 44}));
  EXPECT_EQ(l["euler"], 0);
  auto p = nlohmann::json::parse(run("project --cell cross --census").out);
  EXPECT_EQ(p["total"], 240);
  EXPECT_EQ(p["census"]["t6"], 30);
}

TEST(Cli, BadArgumentsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("reduce").code, 2);
  EXPECT_EQ(run("reduce --order 3 --normal-form sideways").code, 2);
  EXPECT_EQ(run("inflate --matrix Q").code, 2);
  EXPECT_EQ(run("inflate --vector 1,2").code, 2);
  EXPECT_EQ(run("build cube").code, 2);
  EXPECT_EQ(run("lattice --cell square").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("build icosa --out " + g_dir + "/x.stl").code, 2);
}

TEST(Cli, BuildAndExport) {
  const std::string off = g_dir + "/cli_icosa.off", off2 = g_dir + "/cli_icosa2.off", js = g_dir + "/cli_icosa.json";
  CliRun r = run("build icosa --verify --out " + off);
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["tet_count"], 16);
  EXPECT_EQ(j["verify"]["pass"], true);
  ASSERT_EQ(run("export icosa --out " + off2).code, 0);
  std::string a = slurp(off), b = slurp(off2);
  EXPECT_EQ(a.rfind("OFF\n", 0), 0u);
  EXPECT_EQ(a, b);
  ASSERT_EQ(run("build icosa --out " + js).code, 0);
  auto dump = nlohmann::json::parse(slurp(js));
  EXPECT_EQ(dump["tets"].size(), 16u);
  EXPECT_EQ(run("export icosa --mesh obj").out.rfind("v ", 0), 0u);
}

TEST(Cli, OutputIsReproducible) {
  EXPECT_EQ(run("tiles --atlas").out, run("tiles --atlas").out);
  EXPECT_EQ(run("reduce --order 7 --format table").out, run("reduce --order 7 --format table").out);
}

TEST(Cli, VerifySingleAudit) {
  CliRun r = run("verify --only 5 --format json");
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["audits"][0]["id"], 5);
  EXPECT_EQ(j["pass"], true);
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  if (argc < 3) {
    std::fprintf(stderr, "usage: test_cli <mstiler> <scratch-dir>\n");
    return 2;
  }
  g_cli = argv[1];
  g_dir = argv[2];
  return RUN_ALL_TESTS();
}
