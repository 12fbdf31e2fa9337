#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ffc::suites {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  int criterion = 0;
  std::string name;
  std::string title;
  double budget_seconds = 0;
  double seconds = 0;
  std::vector<nlohmann::json> records;
  std::vector<Check> checks;

  std::size_t failures() const;
  bool passed() const { return failures() == 0 && seconds < budget_seconds; }
};

// In criterion order; "all" is not included.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed = 1);

// The tabulated rows as printed, for the CSV view.
struct Table1Row {
  unsigned n = 0;
  std::uint64_t q = 0;
  std::uint64_t N = 0;
  std::vector<std::int64_t> g;  // g_n, g_{n-1}, ...
  std::uint64_t oesterle = 0;
  bool subfield = false;
};
const std::vector<Table1Row>& table1_rows();

}  // namespace ffc::suites
