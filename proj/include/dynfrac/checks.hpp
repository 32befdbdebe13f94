#pragma once

#include <string>
#include <vector>

#include "dynfrac/config.hpp"

namespace dynfrac {

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;  // measured error or statistic
    double limit = 0.0;
    std::string detail;
};

// Invariant suites run by the validate command, using the numeric knobs of cfg.
std::vector<CheckResult> run_checks(const RunConfig& cfg, bool include_slow = true);

}  // namespace dynfrac
