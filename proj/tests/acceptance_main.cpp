// Acceptance gate: runs every criterion at its pinned scale and prints one
// pass/fail line per criterion. Exit status is nonzero when anything fails.

#include <cstdio>

#include "symlift/suites.hpp"

int main() {
  const auto& criteria = symlift::suites::acceptance_criteria();
  int index = 0;
  int failures = 0;
  for (const auto& criterion : criteria) {
    ++index;
    symlift::suites::CriterionResult result;
    std::string error;
    try {
      result = criterion.run(0);
    } catch (const std::exception& e) {
      result.pass = false;
      error = e.what();
    }
    std::printf("[%s] criterion %2d/%zu %-24s %s\n",
                result.pass ? "PASS" : "FAIL", index, criteria.size(),
                criterion.name.c_str(), criterion.summary.c_str());
    if (!result.pass) {
      ++failures;
      if (!error.empty()) std::printf("       error: %s\n", error.c_str());
      for (const auto& rec : result.records)
        if (!rec.pass)
          std::printf("       failed: %s (%s) expected %s got %s\n",
                      rec.name.c_str(), rec.inputs.c_str(), rec.expected.c_str(),
                      rec.got.c_str());
    }
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
