#pragma once

#include <string>
#include <vector>

namespace laq {

struct CriterionResult {
    int number = 0;
    std::string name;    // short label of the claim being exercised
    bool ok = false;
    std::string detail;  // what was compared, or the first mismatch
    explicit operator bool() const { return ok; }
};

// The full self-test suite: nine independent criteria covering coboundary
// alternation, known cohomology tables, invariant subcomplex factorization,
// structural identity sweeps and window stability. Runs in seconds; every
// comparison is exact rational equality against an independently computed
// value (see laq/reference.hpp).
std::vector<CriterionResult> run_acceptance();

}  // namespace laq
