#include <gtest/gtest.h>

#include <cstdlib>

#include "relint/errors.hpp"
#include "relint/suite.hpp"

namespace relint {
namespace {

TEST(Suite, RegistryListsSevenSuites) {
  ASSERT_EQ(suites().size(), 7u);
  EXPECT_EQ(suites().front().name, "interior-equivalence");
  EXPECT_EQ(suites().back().name, "image-calculus");
}

TEST(Suite, ReportsDoNotDependOnThreadCount) {
  for (const char* name : {"bipolar-normal", "sequence-lab", "graphs-orders"}) {
    const SuiteReport one = run_suite(name, {5, 1});
    const SuiteReport four = run_suite(name, {5, 4});
    EXPECT_TRUE(one.passed) << name;
    EXPECT_EQ(one.document.dump(), four.document.dump()) << name;
  }
}

TEST(Suite, SeedChangesInstances) {
  const SuiteReport a = run_suite("bipolar-normal", {1, 1});
  const SuiteReport b = run_suite("bipolar-normal", {2, 1});
  EXPECT_NE(a.document.at("parts").dump(), b.document.at("parts").dump());
}

TEST(Suite, FilterAndUnknownName) {
  EXPECT_EQ(run_suites("sequence", {1, 1}).size(), 1u);
  EXPECT_THROW(run_suite("no-such-suite", {}), InputError);
}

TEST(Suite, ThreadCountFromEnvironment) {
  setenv("RELINT_THREADS", "3", 1);
  EXPECT_EQ(default_thread_count(), 3u);
  setenv("RELINT_THREADS", "zero", 1);
  EXPECT_GE(default_thread_count(), 1u);
  unsetenv("RELINT_THREADS");
}

}  // namespace
}  // namespace relint
