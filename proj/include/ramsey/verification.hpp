#pragma once

#include <string>
#include <vector>

#include "ramsey/calibration.hpp"

namespace ramsey {

struct Claim {
    std::string name;
    bool pass = false;
    std::string witness;  // grid extremes or residual magnitudes backing the verdict
};

struct VerifyReport {
    std::vector<Claim> claims;
    bool all_pass() const;
};

// Full invariant suite: eigenvalue bounds and monotonicity, rule-parameter
// signs, anchor ordering, saddle-node gap, polynomial and rule identities,
// Euler/Phillips residuals, welfare consistency. Deterministic; runs in
// well under a second.
VerifyReport run_verification(const StructuralParams& p);

}  // namespace ramsey
