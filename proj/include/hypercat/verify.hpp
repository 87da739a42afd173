#pragma once

#include <string>
#include <vector>

namespace hypercat::verify {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;   // counterexample or summary values
    double seconds = 0.0;
};

// Fast cross-route spot checks (sub-minute).
std::vector<Check> run_quick();

// The full verification battery, including the heavy series-to-n=400
// convergence runs. Budgets are enforced per check.
std::vector<Check> run_full();

bool all_passed(const std::vector<Check>& checks);

}  // namespace hypercat::verify
