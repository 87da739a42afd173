#include <cstdio>

#include "hypercat/verify.hpp"

// Runs the full verification battery and prints one pass/fail line per check.
int main() {
    const auto checks = hypercat::verify::run_full();
    for (const auto& check : checks) {
        std::printf("%s  %-28s (%.2fs)%s%s\n", check.passed ? "PASS" : "FAIL",
                    check.name.c_str(), check.seconds, check.detail.empty() ? "" : "  ",
                    check.detail.c_str());
    }
    return hypercat::verify::all_passed(checks) ? 0 : 1;
}
