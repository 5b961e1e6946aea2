#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nrt {

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail;  // empty when ok
};

// The worked-example suite behind `verify-examples`: closed-form transfer
// bases for m = 2, 4, 6 with their rewrite identities and relations, and the
// order-6 group computation with its known invariants.
std::vector<CheckResult> verify_m2_transfer();
std::vector<CheckResult> verify_m4_transfer();
std::vector<CheckResult> verify_m6_transfer();
std::vector<CheckResult> verify_order6_group();

// Runs all of the above, printing one PASS/FAIL line per example group.
// Returns true iff everything passed.
bool run_worked_example_checks(std::ostream& out, bool json);

}  // namespace nrt
