// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <cstring>
#include <iostream>

#include "mwis/harness/battery.hpp"

int main(int argc, char** argv) {
  const bool json = argc > 1 && std::strcmp(argv[1], "--json") == 0;
  const auto results = mwis::harness::run_acceptance([&](const mwis::harness::CheckResult& r) {
    if (!json) std::cerr << "  done: criterion " << r.id << std::endl;
  });
  bool ok = true;
  for (const auto& r : results) {
    if (!json) std::cout << mwis::harness::format_line(r) << '\n';
    ok = ok && r.passed;
  }
  if (json) std::cout << mwis::harness::summary_json(results).dump(1) << '\n';
  std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return ok ? 0 : 1;
}
