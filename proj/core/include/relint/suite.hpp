#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace relint {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Worker threads; 0 means default_thread_count().
  std::size_t threads = 0;
};

/// RELINT_THREADS when set to a positive integer, else the number of
/// processors (at least 1).
std::size_t default_thread_count();

struct SuiteReport {
  std::string name;
  bool passed = false;
  /// Deterministic: depends only on the suite name and the seed, never on
  /// timing or the thread count.
  nlohmann::json document;
};

struct SuiteInfo {
  std::string name;
  std::string description;
};

/// Registered property suites, in run order.
const std::vector<SuiteInfo>& suites();

/// Throws InputError for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);
/// Every suite whose name contains `filter` (all of them for an empty filter).
std::vector<SuiteReport> run_suites(const std::string& filter, const SuiteOptions& options);

nlohmann::json summary(const std::vector<SuiteReport>& reports, const SuiteOptions& options);
/// One <name>.json per report.
void write_reports(const std::vector<SuiteReport>& reports, const std::filesystem::path& dir);
/// As above, plus summary.json listing pass/fail per suite.
void write_reports(const std::vector<SuiteReport>& reports, const SuiteOptions& options,
                   const std::filesystem::path& dir);

}  // namespace relint
