#include <gtest/gtest.h>

#include "braidcount/verify.hpp"

using namespace braidcount;

TEST(Verify, EverySuitePassesAtSmallScale) {
  VerifyOptions o;
  o.kmax = 8;
  o.fuzz_samples = 500;
  for (const auto& name : verify_suites()) {
    const auto r = run_verify_suite(name, o);
    EXPECT_TRUE(r.passed) << name << ": " << r.counterexample;
    EXPECT_GT(r.checks, 0) << name;
    EXPECT_EQ(r.suite, name);
  }
}

TEST(Verify, UnknownSuiteIsRejected) {
  EXPECT_THROW(run_verify_suite("nope"), std::invalid_argument);
}

TEST(Verify, ReportKeepsFirstCounterexample) {
  VerifyReport r;
  r.expect(true, "a");
  r.expect(false, "b");
  r.expect(false, "c");
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.counterexample, "b");
  EXPECT_EQ(r.checks, 3);
}
