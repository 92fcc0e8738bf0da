#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef WIENER_CLI
#error "WIENER_CLI must name the CLI binary"
#endif

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(WIENER_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const CliRun& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, Compute) {
  const CliRun r = run("compute 'T(1,2,3)'");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json_of(r);
  EXPECT_EQ(j["complexity"], 7);
  EXPECT_EQ(j["is_irregular"], true);
  EXPECT_EQ(j["wiener"], 50);
}

TEST(Cli, ClassifyLineGraph) {
  const CliRun r = run("classify 'L(T(2,3,4))'");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json_of(r);
  EXPECT_EQ(j["verdict"], "Irregular");
  EXPECT_EQ(j["source"], "T4.2");
}

TEST(Cli, ValidationErrorsExitTwo) {
  const CliRun zero = run("compute 'T(0,1,2)'");
  EXPECT_EQ(zero.code, 2);
  EXPECT_NE(zero.out.find("arm lengths must be ≥ 1"), std::string::npos);

  const CliRun syntax = run("classify 'T(1,2'");
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.out.find("byte 5"), std::string::npos);

  EXPECT_EQ(run("verify NOPE").code, 2);
  EXPECT_EQ(run("verify T2 --range k=0..3").code, 2);
  EXPECT_EQ(run("search --order 25").code, 2);
  EXPECT_EQ(run("compute 'T(1,2,3)' --format csv").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, RenderComputeRoundTrip) {
  for (const char* expr : {"T(1,2,3)", "BS*(2,3)", "C3(1;1,3;2,3)", "L(T(2,3,4))"}) {
    const std::string e = std::string("'") + expr + "'";
    const CliRun direct = run("compute " + e);
    const CliRun piped = run("render " + e + " | " + WIENER_CLI + " compute --edge-list -");
    ASSERT_EQ(direct.code, 0);
    ASSERT_EQ(piped.code, 0);
    EXPECT_EQ(json_of(direct), json_of(piped)) << expr;
  }
}

TEST(Cli, DumpSets) {
  const CliRun r = run("dump-sets 'T(1,2,3)'");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json_of(r);
  EXPECT_EQ(j["family"], "unit-arithmetic");
  EXPECT_EQ(j["offset_base"], 10);
  EXPECT_EQ(j["layers"]["1"], nlohmann::json::array({1, 3, 5}));

  const CliRun dp = run("dump-sets 'T(1,2,3)' --sets dp");
  ASSERT_EQ(dp.code, 0) << dp.out;
  EXPECT_EQ(json_of(dp)["family"], "extremal");
  EXPECT_EQ(run("dump-sets 'T(2,2,2)'").code, 2);
}

TEST(Cli, SearchTrees) {
  const CliRun r = run("search --order 7 --ti-only");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json_of(r);
  EXPECT_EQ(j["trees"], 11);
  EXPECT_EQ(j["irregular"], 1);
  EXPECT_FALSE(j.contains("complexity_histogram"));
}

TEST(Cli, SearchStarlike) {
  const CliRun r = run("search --order 7 --class starlike --arms 3");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json_of(r);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[1]["family"], "T(1,2,3)");
  EXPECT_EQ(j[1]["is_irregular"], true);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run("verify C2.4 --range a=1..10").code, 0);
  EXPECT_EQ(run("verify ClaimA-layers --range a=1 --range k=2").code, 3);
  EXPECT_EQ(run("verify C3.4 --range a=2").code, 3);

  const CliRun csv = run("verify T2.5 --range l=3..6 --format csv --jobs 2");
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("key,instance,outcome,severity,claimed,oracle,detail\n", 0), 0u);
  EXPECT_NE(csv.out.find("l=5,\"T(1,2,3,4,5)\",agree,,NotIrregular,NotIrregular,"),
            std::string::npos);
}

}  // namespace
