#pragma once

#include <string>
#include <vector>

namespace backstable {

struct SuiteReport {
    std::string name;
    long cases = 0;
    // counterexample keys, smallest window/length first
    std::vector<std::string> failures;
    double seconds = 0;
    bool passed() const { return failures.empty(); }
};

std::vector<std::string> suite_names();
// scale at which the suite is meant to certify its identity
int default_suite_size(const std::string& name);

// size caps the scale at the suite default; size <= 0 runs no cases.
// Cases run in parallel, bounded by BACKSTABLE_THREADS; aggregation is
// deterministic. Throws std::invalid_argument on an unknown name.
SuiteReport run_suite(const std::string& name, int size);

}  // namespace backstable
