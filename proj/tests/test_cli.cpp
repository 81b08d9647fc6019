#include "bring/json_io.hpp"
#include "bring/verify.hpp"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace bring;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string("\"") + BRING_CLI_PATH + "\" " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("bring_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, ReduceVerifiesAndExitsZero) {
  const CliRun r = run("reduce --coeffs=1,0,0,1,1,1");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["verification"]["passed"].get<bool>());
  EXPECT_EQ(j["steps"].size(), 1u);
  const ReductionTrace t = trace_from_json(j);
  for (std::size_t k : {4u, 3u, 2u}) EXPECT_TRUE(t.final.coeff(k).is_zero());
}

TEST(Cli, ReduceAlreadyBringJerrard) {
  const CliRun r = run("reduce --coeffs=1,0,0,0,2,3");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["steps"].empty());
  EXPECT_EQ(j["bring_p"].dump(), "[2,1]");
}

TEST(Cli, ReduceRescuedInput) {
  const CliRun r = run("reduce --coeffs=1,0,0,4,-3,1");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["steps"].back()["rescue_lambda"].dump(), "[2,1]");
}

TEST(Cli, ReduceBatchFromFile) {
  const std::string path = temp_file("batch.json", "[{\"coeffs\": [1,1,1,1,1,1]}, {\"coeffs\": [3,2,0,0,0,1]}]");
  const CliRun r = run("reduce --in " + path);
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 2u);
  std::filesystem::remove(path);
}

TEST(Cli, ReduceRejectsNonQuintic) {
  EXPECT_EQ(run("reduce --coeffs=1,2,3").code, 64);
}

TEST(Cli, SolveLowDegree) {
  const CliRun r = run("solve --coeffs=1,-3,2");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["roots"].dump(), "[[1,1],[2,1]]");
  EXPECT_TRUE(j["exact"].get<bool>());
  const CliRun q = run("solve --coeffs=1,0,-5,0,4");
  ASSERT_EQ(q.code, 0);
  EXPECT_EQ(Json::parse(q.out)["roots"].size(), 4u);
}

TEST(Cli, SolveRefusesQuintic) { EXPECT_EQ(run("solve --coeffs=1,0,0,0,1,1").code, 64); }

TEST(Cli, Obstruction) {
  const CliRun r = run("obstruction --p 1 --q 1");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["degree"], 6);
  EXPECT_FALSE(j["degenerate"].get<bool>());
  EXPECT_EQ(j["roots_of_G"].size(), 6u);
  for (const auto& res : j["consistency_residuals"]) {
    EXPECT_LE(res["e_residual"].get<double>(), 1e-25);
    EXPECT_LE(res["f_residual"].get<double>(), 1e-25);
  }
  const Json d = Json::parse(run("obstruction --p 0 --q 1").out);
  EXPECT_TRUE(d["degenerate"].get<bool>());
}

TEST(Cli, VerifyRoundTrip) {
  const std::string path = temp_file("trace.json", run("reduce --coeffs=1,2,-3,1,5,-7").out);
  EXPECT_EQ(run("verify --in " + path).code, 0);
  EXPECT_EQ(run("verify < " + path).code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyRejectsTamperedTrace) {
  Json j = Json::parse(run("reduce --coeffs=1,1,1,1,1,1").out);
  j.erase("verification");
  auto& sub = j["steps"][0]["subsidiary"];
  sub["a"] = Json::array({12345, 1});
  const std::string path = temp_file("tampered.json", j.dump());
  EXPECT_EQ(run("verify --in " + path).code, 1);
  std::filesystem::remove(path);
}

TEST(Cli, MalformedInputIsUsageError) {
  const std::string path = temp_file("bad.json", "{not json");
  EXPECT_EQ(run("verify --in " + path).code, 64);
  std::filesystem::remove(path);
  EXPECT_EQ(run("reduce --coeffs=1,x,3").code, 64);
  EXPECT_EQ(run("--precision-bits 16 reduce --coeffs=1,0,0,0,1,1").code, 64);
  EXPECT_EQ(run("frobnicate").code, 64);
}

TEST(Cli, OutputIsDeterministic) {
  const CliRun a = run("reduce --coeffs=1,-4,2,7,-1,3"), b = run("reduce --coeffs=1,-4,2,7,-1,3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TextOutput) {
  const CliRun r = run("--output text solve --coeffs=1,-3,2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find('1'), std::string::npos);
  EXPECT_FALSE(Json::accept(r.out));
}
