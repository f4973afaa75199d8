#pragma once

#include "ramsey/calibration.hpp"
#include "ramsey/quasi_commitment.hpp"
#include "ramsey/solution.hpp"

namespace ramsey {

// Zero-credibility equilibrium. Kept deliberately separate from the
// quasi-commitment solver: the q -> 0+ limit of quasi-commitment does not
// coincide with q = 0, and the two code paths make that gap a testable
// feature of the artifact.

// Static per-period optimization yields the proportional rule x_t = -epsilon*pi_t.
RuleParameters discretion_rule(double epsilon);

// Unstable inflation eigenvalue (1 + kappa*epsilon)/beta > 1/beta > 1.
double discretion_eigenvalue(const ReducedForm& rf, double beta);

// Unique bounded solution picked by the determinacy condition: inflation and
// the output gap are exactly correlated with the cost-push shock. Documented
// preconditions (not modeled in code): expectations depend on the shock only,
// spiral paths are never selected, the instrument carries no initial
// condition, and all parameters are measured exactly.
struct DeterminateSolution {
    double c_pi;  // pi_t = c_pi * u_t, c_pi = 1/(1 - beta*rho + kappa*epsilon)
    double c_x;   // x_t = c_x * u_t = -epsilon * c_pi * u_t
};
DeterminateSolution determinate_solution(const ReducedForm& rf, double beta, double rho);

// Rows [(1+kappa*epsilon)/beta, -1/beta] and [0, rho].
Mat2 discretion_closed_loop(const ReducedForm& rf, double beta, double rho);

PolicySolution solve_discretion(const StructuralParams& p);

}  // namespace ramsey
