#pragma once

#include <set>
#include <string>
#include <vector>

namespace schubertkit {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Named suites: all, basis, kappa, cotransition, poly.
std::set<int> criteria_for_suite(const std::string& suite);

// Runs the selected criteria. max_n caps the exhaustive symmetric-group
// ranges (the stated ranges use S_4 and S_5).
std::vector<CriterionResult> run_acceptance(const std::set<int>& criteria, int max_n = 5);

}  // namespace schubertkit
