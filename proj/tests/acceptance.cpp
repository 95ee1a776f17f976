// Runs every acceptance suite once and prints one line per criterion:
//   PASS|FAIL  <id>  <name>  checks=<n>  time=<s>/<budget>s
// Exit status is 0 only when every criterion passes. Pass "full" as the first
// argument to run the enlarged families.

#include <cstdio>
#include <string_view>

#include "mvdual/selftest.hpp"

int main(int argc, char** argv) {
  mvdual::SelftestOptions options;
  if (argc > 1 && std::string_view(argv[1]) == "full") options.scale = mvdual::Scale::full;

  int failures = 0;
  for (const auto& suite : mvdual::suites()) {
    const mvdual::SuiteResult r = mvdual::run_suite(suite, options);
    std::printf("%s  criterion %2d  %-55s checks=%llu  time=%.2f/%.0fs\n",
                r.passed() ? "PASS" : "FAIL", r.id, r.name.c_str(),
                static_cast<unsigned long long>(r.checks), r.seconds, r.budget_seconds);
    if (!r.passed()) {
      ++failures;
      if (!r.correct) std::printf("      %s\n", r.detail.c_str());
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(mvdual::suites().size()) - failures,
              mvdual::suites().size());
  return failures == 0 ? 0 : 1;
}
