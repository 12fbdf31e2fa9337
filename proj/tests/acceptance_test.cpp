// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include <cstdio>
#include <exception>
#include <iostream>

#include "ffcurve/suites.hpp"

int main() {
  int failed = 0;
  for (const auto& name : ffc::suites::suite_names()) {
    ffc::suites::SuiteResult r;
    try {
      r = ffc::suites::run_suite(name, 1);
    } catch (const std::exception& e) {
      std::cout << "FAIL criterion ?: " << name << " (threw: " << e.what() << ")\n";
      ++failed;
      continue;
    }
    const bool ok = r.passed();
    std::printf("%s criterion %d: %s (%zu/%zu checks, %.2fs of %.0fs budget)\n", ok ? "PASS" : "FAIL", r.criterion,
                r.title.c_str(), r.checks.size() - r.failures(), r.checks.size(), r.seconds, r.budget_seconds);
    for (const auto& c : r.checks) {
      if (!c.pass) std::printf("    failed: %s%s%s\n", c.name.c_str(), c.detail.empty() ? "" : ": ", c.detail.c_str());
    }
    if (!ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
