#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symlift/report.hpp"

namespace symlift::suites {

struct CriterionResult {
  bool pass = false;
  std::vector<report::Record> records;
};

struct Criterion {
  std::string name;
  std::string summary;
  std::function<CriterionResult(std::uint64_t seed)> run;
};

/// The acceptance checks, in order. Each runs at its pinned scale and
/// tolerance (everything here is exact; two have wall-clock budgets that
/// are enforced, not observed).
const std::vector<Criterion>& acceptance_criteria();

report::Report run_acceptance(std::uint64_t seed = 0);
report::Report run_properties(std::uint64_t seed);

}  // namespace symlift::suites
