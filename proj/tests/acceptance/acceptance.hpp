#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dunkl::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

constexpr int criterion_count = 13;

// Runs the listed criteria (all when empty), streaming one line per result
// to `log` if given.
std::vector<CriterionResult> run(const std::vector<int>& only = {}, std::ostream* log = nullptr);

CriterionResult run_one(int id);

// "PASS  3 coefficient routes agree: ... (1.2 s)"
std::string format_line(const CriterionResult& r);

}  // namespace dunkl::acceptance
