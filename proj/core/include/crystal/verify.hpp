#pragma once

// Named invariant checks for one dominant weight, run across all three
// realizations: exhaustive generation, the crystal axioms, both membership
// characterizations, weight multiplicities against direct enumeration, the
// tableau isomorphisms, and the product factorization into fundamental
// members.

#include "crystal/cartan.hpp"
#include "crystal/crystal.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace crystal {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    int rank = 0;
    Weight lambda;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

VerifyReport verify_weight(const Weight& lambda, std::size_t max_nodes = kDefaultMaxNodes);

/// One line per check, "name: PASS/FAIL (detail)", plus a summary line.
std::string format_report(const VerifyReport& report);

}  // namespace crystal
