#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hilbfrob {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = false;
    std::string detail; // first failure witness, or a short summary
    double seconds = 0.0;
};

struct SelftestOptions {
    std::vector<int> criteria; // empty = all
    int jobs = 1;
    long long budget = 2000000;
    unsigned long long seed = 12345;
};

/// Runs the acceptance criteria; on_result is called once per criterion as it
/// finishes (pass/fail plus witness). Returns true iff all requested
/// criteria pass.
bool run_selftest(const SelftestOptions& opt,
                  const std::function<void(const CriterionResult&)>& on_result);

} // namespace hilbfrob
