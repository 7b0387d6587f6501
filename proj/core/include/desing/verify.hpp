#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace desing {

enum class Suite { all, exact, numeric };

Suite parse_suite(std::string_view name);

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Largest numeric deviation, or the number of mismatching entries for
  /// exact checks.
  double worst_deviation = 0;
  double seconds = 0;
  double time_limit = 0;  // 0: unlimited
  std::string detail;
};

/// Runs the checks of a suite; results are ordered by id.
std::vector<CheckResult> run_suite(Suite suite);

/// "PASS [id] name  worst=... time=...s" style line.
std::string format_result(const CheckResult& r);

}  // namespace desing
