#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "orbitcalc/algebra_io.hpp"
#include "orbitcalc/lie_algebra.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" ORBITCALC_CLI "\" " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json run_json(const std::string& args, int expected_status = 0, const std::string& env = "") {
  const CliRun r = run(args + " --format json", env);
  EXPECT_EQ(r.status, expected_status) << args;
  return json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("orbitcalc_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, VerifySu2Fundamental) {
  const json doc = run_json("verify --algebra su2 --weight 1");
  const json& c = doc["results"][0]["cotangent"];
  EXPECT_EQ(c["dim_Q"], 3);
  EXPECT_EQ(c["dim_bimodule"], 12);
  EXPECT_EQ(doc["verdict"], "pass");
}

TEST(Cli, VerifyDirectSum) {
  const json doc = run_json("verify -a su2+su2 -w 1 0");
  const json& c = doc["results"][0]["cotangent"];
  EXPECT_EQ(c["dim_g_o"], 3);
  EXPECT_EQ(c["dim_Q"], 3);
  EXPECT_EQ(c["dim_g_lambda"], 3);
}

TEST(Cli, IrrepReportsOracleAgreement) {
  const json doc = run_json("irrep -a su3 -w 1 1");
  const json& r = doc["results"][0]["irrep"];
  EXPECT_EQ(r["dimension"], 8);
  EXPECT_EQ(r["weyl_dimension"], 8);
  EXPECT_TRUE(r["multiplicities_match"].get<bool>());
}

TEST(Cli, SchemaAndResiduals) {
  const json doc = run_json("orbit -a su3 -w 1 0");
  for (const char* key : {"config", "results", "residuals", "verdict", "version"}) EXPECT_TRUE(doc.contains(key)) << key;
  ASSERT_FALSE(doc["residuals"].empty());
  for (const auto& [name, v] : doc["residuals"].items()) {
    ASSERT_TRUE(v.is_number()) << name;
    EXPECT_TRUE(std::isfinite(v.get<double>())) << name;
    EXPECT_GE(v.get<double>(), 0.0) << name;
  }
}

TEST(Cli, TrivialWeightPassesAndIsFlagged) {
  const json doc = run_json("verify -a su3 -w 0 0");
  const json& c = doc["results"][0]["cotangent"];
  EXPECT_TRUE(c["trivial"].get<bool>());
  EXPECT_EQ(c["dim_Q"], 0);
  EXPECT_EQ(c["dim_g_lambda"], 0);
  EXPECT_TRUE(c.contains("note"));
  EXPECT_EQ(doc["verdict"], "pass");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("verify").status, 2);
  EXPECT_EQ(run("verify -a su3 -w 1").status, 2);
  EXPECT_EQ(run("verify -a e8 -w 1").status, 2);
  EXPECT_EQ(run("verify -a su3 -w 1 -1").status, 2);
  EXPECT_EQ(run("verify -a su2 -w 1 --format xml").status, 2);
  EXPECT_EQ(run("verify -a su2 -w 1", "ORBITCALC_TOL=abc").status, 2);
}

TEST(Cli, UnreachableWeightFails) {
  // One of the two fundamental weights of so(5) is the spin weight.
  const CliRun a = run("irrep -a so5 -w 1 0");
  const CliRun b = run("irrep -a so5 -w 0 1");
  EXPECT_EQ(std::min(a.status, b.status), 0);
  EXPECT_EQ(std::max(a.status, b.status), 1);
}

TEST(Cli, WeightsFileBatch) {
  const auto path = temp_file("weights.txt");
  {
    std::ofstream f(path);
    f << "# su3 cases\n1 0\n\n1 1\n2 0\n";
  }
  const json doc = run_json("verify -a su3 --weights-file " + path.string());
  ASSERT_EQ(doc["results"].size(), 3u);
  for (const auto& r : doc["results"]) EXPECT_EQ(r["cotangent"]["dim_Q"], 8);
  std::filesystem::remove(path);
}

TEST(Cli, ToleranceFromEnvironment) {
  const json doc = run_json("verify -a su2 -w 2", 0, "ORBITCALC_TOL=1e-10,1e-9");
  EXPECT_DOUBLE_EQ(doc["config"]["tolerance"]["residual"].get<double>(), 1e-10);
  EXPECT_DOUBLE_EQ(doc["config"]["tolerance"]["rank_rel"].get<double>(), 1e-9);
  EXPECT_EQ(doc["results"][0]["cotangent"]["dim_Q"], 3);
}

TEST(Cli, AlgebraFromJsonFile) {
  const auto path = temp_file("su3.json");
  std::ofstream(path) << orbitcalc::io::algebra_to_json(orbitcalc::algebras::su(3)).dump();
  const json doc = run_json("verify -a " + path.string() + " -w 1 1");
  EXPECT_EQ(doc["results"][0]["cotangent"]["dim_Q"], 8);
  std::filesystem::remove(path);
}

TEST(Cli, OutputFileAndTextFormat) {
  const auto path = temp_file("out.json");
  const CliRun r = run("roots -a su4 --format json -o " + path.string());
  EXPECT_EQ(r.status, 0);
  std::ifstream in(path);
  const json doc = json::parse(in);
  EXPECT_EQ(doc["results"][0]["roots"]["roots"], 12);
  std::filesystem::remove(path);

  const CliRun text = run("roots -a su2");
  EXPECT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("verdict"), std::string::npos);
}
