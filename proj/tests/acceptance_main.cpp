// Runs the acceptance suite and prints one line per criterion. Exit status is
// the number of failing criteria (0 when everything holds). All dimension and
// matrix comparisons inside the suite are exact rational equalities; there are
// no tolerances to tune.

#include <cstdio>

#include "laq/selftest.hpp"

int main() {
    const auto results = laq::run_acceptance();
    int failures = 0;
    for (const auto& r : results) {
        if (!r.ok) ++failures;
        std::printf("%s  criterion %d: %s%s%s\n", r.ok ? "PASS" : "FAIL", r.number,
                    r.name.c_str(), r.detail.empty() ? "" : " -- ", r.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures;
}
