#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

using nlohmann::json;

struct Result {
  std::string out;
  int status = -1;
};

// Runs a shell pipeline; "pfan" is replaced by the built binary.
Result sh(std::string cmd) {
  const std::string bin = PFAN_BINARY;
  for (std::size_t pos = 0; (pos = cmd.find("pfan ", pos)) != std::string::npos; pos += bin.size() + 1)
    cmd.replace(pos, 4, bin);
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

TEST(Cli, PotentialIdentifications) {
  const Result r = sh("pfan examples hirzebruch-a1 | pfan partition potentials");
  ASSERT_EQ(r.status, 0) << r.out;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("classes").size(), 5u);
  EXPECT_TRUE(j.contains("fan"));
}

TEST(Cli, TorusPipeline) {
  const Result r = sh("pfan examples square | pfan partition closure --seed 's1~s3,s2~s4' | pfan cw build | pfan cw euler");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(json::parse(r.out), 0);
}

TEST(Cli, BrauerFanFromArrangement) {
  const Result r = sh("pfan examples brauer3 | pfan fan from-arrangement | pfan fan validate");
  ASSERT_EQ(r.status, 0) << r.out;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("valid"), true);
  EXPECT_EQ(j.at("chambers"), 32);
  EXPECT_EQ(j.at("complete"), true);
}

TEST(Cli, ErrorsAreJsonWithExitCodeOne) {
  const Result r = sh("pfan examples square | pfan poset functional --functional 1,0");
  EXPECT_EQ(r.status, 1);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("error"), "DegenerateFunctional");
  EXPECT_TRUE(j.contains("witness"));
  const Result bad = sh("echo '{\"dim\": 2' | pfan fan validate");
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(json::parse(bad.out).at("error"), "ParseError");
}

TEST(Cli, GapOutput) {
  const Result r = sh("pfan examples square | pfan partition closure --seed 's1~s3,s2~s4' | pfan group picture --functional 1,1 --gap");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("FreeGroup"), std::string::npos);
}

}  // namespace
