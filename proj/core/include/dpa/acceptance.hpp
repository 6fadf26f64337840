#pragma once

#include <string>
#include <vector>

namespace dpa {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double measured = 0.0;   // worst observed error for the headline check
    double tolerance = 0.0;
    double seconds = 0.0;
    std::string detail;      // further measured values, key=value separated by spaces
};

// Runs the numbered acceptance checks. quick reduces sample counts, not tolerances.
std::vector<CriterionResult> run_acceptance(bool quick = false);

// Runs a single check by id (1..13).
CriterionResult run_criterion(int id, bool quick = false);

}  // namespace dpa
