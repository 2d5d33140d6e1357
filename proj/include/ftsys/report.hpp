#pragma once

/*
 * Machine-readable verification reports.  A suite bundles named checks;
 * each check records how many tuples it examined and any failures.
 * Sampled runs are reproducible from (seed, count).
 */

#include <cstdint>
#include <string>
#include <vector>

namespace ftsys {

struct CheckResult {
  std::string check_id;
  std::string detail;  // the identity or property being verified
  long tuples_checked = 0;
  std::vector<std::string> failures;
};

struct SuiteMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  long count = 0;
};

struct SuiteReport {
  std::string suite;
  std::string type_label;
  SuiteMode mode;
  std::vector<CheckResult> checks;

  long total_failures() const {
    long n = 0;
    for (const auto& c : checks) n += static_cast<long>(c.failures.size());
    return n;
  }
  bool ok() const { return total_failures() == 0; }
};

}  // namespace ftsys
