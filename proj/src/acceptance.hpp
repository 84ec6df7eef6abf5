#pragma once

#include <string>
#include <vector>

namespace smg {

struct CriterionResult {
    std::string id;
    bool passed = false;
    std::string detail;
};

struct AcceptanceReport {
    std::vector<CriterionResult> results;
    bool all_passed() const {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }
    std::string format() const; // one PASS/FAIL line per criterion
};

// suite: one of schroeder, actions, contraction, components, loops, corpus,
// or "all"
AcceptanceReport run_acceptance(const std::string& suite);

} // namespace smg
