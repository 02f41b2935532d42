#include <gtest/gtest.h>

#include "meander/errors.hpp"
#include "meander/verify.hpp"

using namespace meander;

TEST(Verify, EverySuitePassesAtSmallSize) {
  VerifyParams params;
  params.n = 3;
  params.d = 2;
  params.seed = 11;
  params.instances = 20;
  for (const auto& name : suite_names()) {
    auto report = run_suite(name, params);
    EXPECT_TRUE(report.passed()) << name << ": " << report.failures.dump();
    EXPECT_GT(report.instances, 0) << name;
    EXPECT_EQ(report.suite, name);
  }
}

TEST(Verify, SuiteNames) {
  EXPECT_EQ(suite_names(), (std::vector<std::string>{"wick", "theorem14", "prop18", "prop310", "lemma415", "cor412",
                                                     "commutator", "q0bnc"}));
  EXPECT_THROW(run_suite("nope", {}), DomainError);
}

TEST(Verify, ReportIsDeterministic) {
  VerifyParams params;
  params.n = 4;
  params.seed = 7;
  params.instances = 30;
  const auto a = verify_wick(params).to_json();
  const auto b = verify_wick(params).to_json();
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["seed"], 7);
  EXPECT_EQ(a["schema_version"], 1);
  EXPECT_TRUE(a["passed"].get<bool>());
}

TEST(Verify, LargerCases) {
  VerifyParams params;
  params.n = 4;
  params.d = 3;
  params.instances = 100;
  EXPECT_TRUE(verify_theorem14(params).passed());
  EXPECT_TRUE(verify_q0bnc(params).passed());
  params.d = 2;
  EXPECT_TRUE(verify_prop310(params).passed());
  EXPECT_TRUE(verify_lemma415(params).passed());
}
