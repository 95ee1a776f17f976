#pragma once

// The verification suites run by `mvdual selftest` and by the acceptance
// test binary. Each suite is exact; its time budget is part of the pass
// condition.

#include <functional>
#include <string>
#include <vector>

#include "mvdual/config.hpp"

namespace mvdual {

enum class Scale { small, full };

struct SelftestOptions {
  Scale scale = Scale::small;
  OracleConfig config{};
  /// Makes the first suite assert a false identity; used to test that
  /// failures propagate to the exit status.
  bool inject_fault = false;
  /// Run only these suite ids; empty means all.
  std::vector<int> only;
};

struct SuiteResult {
  int id = 0;
  std::string name;
  bool correct = false;
  std::uint64_t checks = 0;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;  // first failure, if any

  bool passed() const { return correct && seconds < budget_seconds; }
};

struct Suite {
  int id;
  std::string name;
  double budget_seconds;
  std::function<SuiteResult(const SelftestOptions&)> run;
};

const std::vector<Suite>& suites();

SuiteResult run_suite(const Suite& suite, const SelftestOptions& options);
std::vector<SuiteResult> run_all_suites(const SelftestOptions& options);

}  // namespace mvdual
