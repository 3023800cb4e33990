#pragma once

#include <string>
#include <vector>

namespace srm::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/// Named verification suites; "all" is the acceptance gate.
SuiteResult run_suite(const std::string& name);
std::vector<std::string> suite_names();

/// One "criterion N: PASS/FAIL ..." line per entry.
void print_suite(const SuiteResult& r, std::ostream& os);

} // namespace srm::verify
