#include <gtest/gtest.h>

#include <json.hpp>

#include "altruns/verify.hpp"

using namespace altruns;

TEST(VerifyAll, FullRunPasses) {
  const VerificationReport report = verify_all(15, 8);
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.tripwires(), 0u);
  EXPECT_EQ(report.checks.size(), available_checks().size());
}

TEST(VerifyAll, SmallestRun) {
  const VerificationReport report = verify_all(2, 2);
  EXPECT_TRUE(report.passed());
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& c) { return c.name == "runs.stanley"; });
  ASSERT_NE(it, report.checks.end());
  EXPECT_EQ(it->range, "n=2..2");
}

TEST(VerifyAll, InjectedFaultIsPinpointed) {
  VerifyOptions options;
  options.inject_fault = Cell{7, 3};
  const VerificationReport report = verify_all(10, 8, options);
  EXPECT_FALSE(report.passed());
  for (const char* name : {"runs.poly_recurrence", "runs.theorem", "runs.explicit", "runs.stanley", "runs.oracle"}) {
    const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                                 [&](const CheckResult& c) { return c.name == name; });
    ASSERT_NE(it, report.checks.end()) << name;
    EXPECT_FALSE(it->passed) << name;
    ASSERT_TRUE(it->first_failure.has_value()) << name;
    EXPECT_EQ(*it->first_failure, (Cell{7, 3})) << name;
  }
  // Checks that never read the runs table are unaffected.
  for (const auto& c : report.checks)
    if (c.name.rfind("derivpoly.", 0) == 0 || c.name.rfind("stirling.", 0) == 0) EXPECT_TRUE(c.passed) << c.name;
}

TEST(VerifyAll, CheckFilter) {
  VerifyOptions options;
  options.checks = {"runs", "knuth.identity"};
  const VerificationReport report = verify_all(6, 4, options);
  ASSERT_FALSE(report.checks.empty());
  for (const auto& c : report.checks) EXPECT_TRUE(c.name.rfind("runs.", 0) == 0 || c.name == "knuth.identity") << c.name;
  EXPECT_EQ(report.checks.back().name, "knuth.identity");

  options.checks = {"nope"};
  EXPECT_THROW(verify_all(6, 4, options), DomainError);
  options.checks = {"run"};  // prefixes must end at a dot boundary
  EXPECT_THROW(verify_all(6, 4, options), DomainError);
}

TEST(VerifyAll, ArgumentErrors) {
  EXPECT_THROW(verify_all(1, 1), DomainError);
  EXPECT_THROW(verify_all(10, 10), CapExceeded);
  VerifyOptions options;
  options.inject_fault = Cell{30, 1};
  EXPECT_THROW(verify_all(10, 2, options), DomainError);
}

TEST(VerifyAll, SerialAndParallelReportsMatch) {
  VerifyOptions serial;
  serial.parallel = false;
  EXPECT_EQ(verify_all(12, 6, serial).to_json(), verify_all(12, 6).to_json());
}

TEST(VerificationReport, JsonShape) {
  VerifyOptions options;
  options.checks = {"runs.row_sums", "canfield_wilf.ratio"};
  options.inject_fault = Cell{5, 2};
  const auto doc = nlohmann::json::parse(verify_all(8, 3, options).to_json());
  EXPECT_EQ(doc["overall"], "fail");
  EXPECT_EQ(doc["n_max"], 8);
  EXPECT_EQ(doc["oracle_max"], 3);
  EXPECT_EQ(doc["exactness_tripwires"], 0);
  ASSERT_EQ(doc["checks"].size(), 2u);
  const auto& sums = doc["checks"][0];
  EXPECT_EQ(sums["name"], "runs.row_sums");
  EXPECT_EQ(sums["status"], "fail");
  EXPECT_EQ(sums["first_failure"]["n"], 5);
  const auto& ratio = doc["checks"][1];
  EXPECT_EQ(ratio["name"], "canfield_wilf.ratio");
  EXPECT_EQ(ratio["status"], "pass");
  EXPECT_TRUE(ratio["first_failure"].is_null());

  const std::string text = verify_all(8, 3, options).to_json();
  EXPECT_LT(text.find("\"overall\""), text.find("\"n_max\""));
  EXPECT_LT(text.find("\"n_max\""), text.find("\"checks\""));
}
