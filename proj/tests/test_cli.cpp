// In-process tests of the command-line front end.

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "altruns");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = altruns::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class HardCapEnv : public ::testing::Test {
 protected:
  void TearDown() override { unsetenv("ALTRUNS_ORACLE_HARD_CAP"); }
};

}  // namespace

TEST(CliTable, RunsCsv) {
  const auto r = run({"table", "runs", "--n-max", "5", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n2,4\n2,12,10\n2,28,58,32\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(CliTable, EveryRunsMethodAgrees) {
  const auto base = run({"table", "runs", "--n-max", "9"});
  for (const char* m : {"recurrence", "poly-recurrence", "theorem", "explicit", "stanley", "oracle"}) {
    const auto r = run({"table", "runs", "--n-max", "9", "--method", m});
    EXPECT_EQ(r.code, 0) << m;
    EXPECT_EQ(r.out, base.out) << m;
  }
}

TEST(CliTable, OtherFamilies) {
  EXPECT_EQ(run({"table", "stirling", "--n-max", "1", "--format", "json"}).out, "[[1]]\n");
  EXPECT_EQ(run({"table", "stirling", "--n-max", "4"}).out, "1\n1,1\n1,3,1\n1,7,6,1\n");
  EXPECT_EQ(run({"table", "eulerian", "--n-max", "4"}).out, "1\n1,1\n1,4,1\n1,11,11,1\n");
  EXPECT_EQ(run({"table", "eulerian", "--n-max", "6", "--method", "oracle"}).out,
            run({"table", "eulerian", "--n-max", "6"}).out);
  EXPECT_EQ(run({"table", "tangent", "--n-max", "4"}).out, "1\n0,2\n2,0,6\n0,16,0,24\n");
  EXPECT_EQ(run({"table", "derivcoef", "--n-max", "2"}).out, "0,1\n1,0,1\n0,2,0,2\n");
}

TEST(CliTable, UsageErrors) {
  EXPECT_EQ(run({"table", "runs", "--n-max", "1"}).code, 2);
  EXPECT_EQ(run({"table", "bogus", "--n-max", "4"}).code, 2);
  EXPECT_EQ(run({"table", "runs", "--n-max", "4", "--method", "magic"}).code, 2);
  EXPECT_EQ(run({"table", "runs", "--n-max", "4", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"table", "runs"}).code, 2);
  EXPECT_EQ(run({"table", "runs", "--n-max", "abc"}).code, 2);
  EXPECT_EQ(run({"table", "runs", "--n-max", "-3"}).code, 2);
  EXPECT_EQ(run({"table", "stirling", "--n-max", "4", "--method", "oracle"}).code, 2);
  EXPECT_EQ(run({"table", "runs", "--n-max", "10", "--method", "oracle"}).code, 2);
  const auto r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliPoly, Examples) {
  EXPECT_EQ(run({"poly", "P", "--n", "4"}).out, "16x + 40x^3 + 24x^5\n");
  EXPECT_EQ(run({"poly", "R", "--n", "2"}).out, "2x\n");
  EXPECT_EQ(run({"poly", "a", "--n", "3"}).out, "2 - 8y^2 + 6y^4\n");
  EXPECT_EQ(run({"poly", "A", "--n", "4"}).out, "x + 11x^2 + 11x^3 + x^4\n");
  EXPECT_EQ(run({"poly", "R", "--n", "1"}).out, "1\n");
  EXPECT_EQ(run({"poly", "R", "--n", "4", "--format", "csv"}).out, "0,2,12,10\n");
}

TEST(CliPoly, UsageErrors) {
  EXPECT_EQ(run({"poly", "Q", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"poly", "P", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"poly", "P"}).code, 2);
}

TEST(CliVerify, PassesAndEmitsJson) {
  const auto r = run({"verify", "--n-max", "3", "--oracle-max", "2"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["overall"], "pass");
}

TEST(CliVerify, InjectedFaultExitsOne) {
  const auto r = run({"verify", "--n-max", "8", "--oracle-max", "6", "--inject-fault", "6,3"});
  EXPECT_EQ(r.code, 1);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["overall"], "fail");
  bool found = false;
  for (const auto& c : doc["checks"])
    if (c["name"] == "runs.stanley") {
      found = true;
      EXPECT_EQ(c["first_failure"]["n"], 6);
      EXPECT_EQ(c["first_failure"]["k"], 3);
    }
  EXPECT_TRUE(found);
}

TEST(CliVerify, PrettyAndFilter) {
  const auto r = run({"verify", "--n-max", "6", "--oracle-max", "4", "--format", "pretty", "--checks", "knuth"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PASS knuth.identity [n=2..6]\noverall: pass, exactness tripwires: 0\n");
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(run({"verify", "--n-max", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "--checks", "nonexistent"}).code, 2);
  EXPECT_EQ(run({"verify", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"verify", "--inject-fault", "x"}).code, 2);
  EXPECT_EQ(run({"verify", "--n-max", "4", "--oracle-max", "10"}).code, 2);
}

TEST_F(HardCapEnv, OracleCaps) {
  // 10 is above the default cap; the flag raises it to the hard cap.
  EXPECT_EQ(run({"table", "runs", "--n-max", "10", "--method", "oracle"}).code, 2);
  EXPECT_EQ(run({"verify", "--n-max", "4", "--oracle-max", "12", "--allow-large-oracle"}).code, 2);

  setenv("ALTRUNS_ORACLE_HARD_CAP", "10", 1);
  const auto r = run({"table", "runs", "--n-max", "10", "--method", "oracle", "--allow-large-oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, run({"table", "runs", "--n-max", "10"}).out);
  EXPECT_EQ(run({"table", "runs", "--n-max", "11", "--method", "oracle", "--allow-large-oracle"}).code, 2);

  setenv("ALTRUNS_ORACLE_HARD_CAP", "5", 1);
  EXPECT_EQ(run({"verify", "--n-max", "4", "--oracle-max", "6"}).code, 2);
  EXPECT_EQ(run({"verify", "--n-max", "4", "--oracle-max", "5"}).code, 0);

  setenv("ALTRUNS_ORACLE_HARD_CAP", "lots", 1);
  EXPECT_EQ(run({"verify", "--n-max", "4", "--oracle-max", "3"}).code, 2);
}

TEST(CliHelp, ExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("table"), std::string::npos);
  EXPECT_NE(r.out.find("decimal strings"), std::string::npos);
  EXPECT_EQ(r.out.find("inject-fault"), std::string::npos);
}
