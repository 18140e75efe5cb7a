#pragma once

#include <string>
#include <vector>

namespace wirtinger {

enum class Suite { Quick, Full };

Suite parse_suite(const std::string& name);

struct CheckResult {
    std::string name;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool relative = false;  // tolerance scales with |expected|
    bool passed = false;
    std::string detail;     // error text when the check could not be evaluated
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::vector<const CheckResult*> failures() const;
};

/// Cross-pipeline self test: closed forms against K(1), F'(1) and K'(m)
/// against finite differences, the direct oracle against the solver, and
/// profile residuals. Quick runs a representative subset.
VerificationReport run_verification(Suite suite);

}  // namespace wirtinger
