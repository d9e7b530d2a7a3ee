#pragma once

#include <string>
#include <vector>

namespace hilbext {

/// One reproduced published value, checked against an independently computed expectation.
struct ClaimResult {
    int criterion = 0;
    std::string claim;
    bool passed = false;
    std::string detail;
};

/// The self-contained reproduction suite behind `hilbext verify-paper`
/// (criteria 1-8: closed forms, differences, verdicts, degrees, Grassmannian checks).
std::vector<ClaimResult> run_paper_checks();

} // namespace hilbext
