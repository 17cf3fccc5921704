#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mwis::harness {

struct CheckResult {
  int id = 0;  // criterion number; 0 for invariant checks
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;  // 0 = no runtime limit
};

using ResultSink = std::function<void(const CheckResult&)>;

/// Runs the acceptance criteria 1..10. `sink` sees each result as it
/// completes; the returned list is ordered by criterion number.
std::vector<CheckResult> run_acceptance(const ResultSink& sink = {});

/// Module invariant suite. Output contains no timing, so two runs give
/// identical reports.
std::vector<CheckResult> run_invariants(const ResultSink& sink = {});

/// "criterion 3 PASS  title: detail (1.2 s / 300 s)"
std::string format_line(const CheckResult& r, bool with_timing = true);

nlohmann::json summary_json(const std::vector<CheckResult>& results, bool with_timing = true);

}  // namespace mwis::harness
