#pragma once

// Acceptance suites: one self-contained check per shipped guarantee, each
// returning a pass/fail line. The `verify` CLI command and the acceptance
// test binary both run these.

#include <string>
#include <vector>

namespace geospec {

struct CriterionResult {
    std::string name;
    bool passed = false;
    std::string detail;  // failure description, or a short summary when passed
    double seconds = 0.0;
};

// Suite names in the fixed (alphabetical) execution order.
std::vector<std::string> acceptance_names();

// Run one suite by name; throws std::invalid_argument for unknown names.
CriterionResult run_acceptance(const std::string& name);

std::vector<CriterionResult> run_all_acceptance();

}  // namespace geospec
