#pragma once

#include "ramsey/calibration.hpp"
#include "ramsey/solution.hpp"

namespace ramsey {

// Smallest admissible credibility. Below this the eigenvalue should be taken
// from eigenvalue_zero_credibility_limit instead of the quadratic.
inline constexpr double kMinCredibility = 1e-12;

// Stable root of
//
//   x^2 - (1 + 1/bq + kappa_eps/bq) x + 1/bq = 0,   bq = beta*q.
//
// Computed larger-root-first (root product / larger root) so that no
// cancellation occurs even when 1/bq is of order 1e12. At kappa_eps = 0 the
// polynomial factors as (x - 1)(x - 1/bq) and the stable root is exactly 1.
double stable_quadratic_root(double kappa_eps, double beta_q);

// Inflation eigenvalue lambda(q, epsilon) in (0,1). Rejects q outside
// [kMinCredibility, 1]; q = 0 belongs to the discretion module.
double inflation_eigenvalue(const ReducedForm& rf, double beta, double q);

// Analytic q -> 0+ limit of the inflation eigenvalue, 1/(1 + kappa*epsilon).
double eigenvalue_zero_credibility_limit(const ReducedForm& rf);

struct RuleParameters {
    double f_pi;  // > 0
    double f_u;   // < 0
};
// f_pi = (lambda/(1-lambda))*epsilon, f_u = -f_pi/(1 - beta*q*rho*lambda).
// The equivalent form f_pi = (1 - beta*q*lambda)/kappa is checked in tests.
RuleParameters rule_parameters(double lambda, const ReducedForm& rf, double beta, double q,
                               double rho);

struct CostateParameters {
    double p_pi;  // > 0
    double p_u;   // < 0
};
// Feedback representation of the Lagrange multiplier on the Phillips curve:
// p_pi = 1/(1-lambda), p_u = p_pi * lambda/(beta*q*lambda*rho - 1).
CostateParameters costate_parameters(double lambda, double beta, double q, double rho);

struct InitialAnchor {
    double anchor_pi;  // pi_0/u_0 = lambda/(1 - beta*q*rho*lambda)
    double anchor_x;   // -epsilon * anchor_pi
};
InitialAnchor initial_anchor(double lambda, double beta, double q, double rho, double epsilon);

// Closed loop on (pi_t, u_t): rows [lambda, -lambda(1-rho)/(1-beta*q*rho*lambda)]
// and [0, rho]. The off-diagonal is the cancellation-free form of
// -1/(beta*q) - (kappa/(beta*q))*f_u; the two agree algebraically and the
// naive composition is exercised in tests.
Mat2 closed_loop_system(double lambda, double beta, double q, double rho);

PolicySolution solve_quasi_commitment(const StructuralParams& p, double q);

}  // namespace ramsey
