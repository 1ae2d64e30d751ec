#pragma once

#include <string>
#include <vector>

namespace irrcount {

struct CriterionResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first failure, empty when passed
};

// The full acceptance battery: worked examples, dual-path oracle
// equivalence, branching reproduction, Kostka equivalence, painting
// brute-force equivalence, non-integral spot checks, and the two variant
// regression guards.  All checks are exact integer equalities.
std::vector<CriterionResult> runAcceptance(int threads = 1);

}  // namespace irrcount
