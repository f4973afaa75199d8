#include "ramsey/quasi_commitment.hpp"

#include <cmath>
#include <stdexcept>

namespace ramsey {

double stable_quadratic_root(double kappa_eps, double beta_q) {
    if (!(beta_q > 0.0 && beta_q < 1.0))
        throw std::domain_error("beta*q must lie in (0,1)");
    if (kappa_eps == 0.0) return 1.0;  // (x-1)(x-1/bq) factorization

    const double inv_bq = 1.0 / beta_q;
    const double sum = 1.0 + inv_bq + kappa_eps * inv_bq;  // root sum
    const double larger = 0.5 * (sum + std::sqrt(sum * sum - 4.0 * inv_bq));
    return inv_bq / larger;  // root product / larger root
}

double inflation_eigenvalue(const ReducedForm& rf, double beta, double q) {
    if (q > 1.0) throw std::domain_error("q must lie in (0,1]");
    if (q <= 0.0)
        throw std::domain_error("q = 0 is the discretion regime; use solve_discretion");
    if (q < kMinCredibility)
        throw std::domain_error(
            "q below 1e-12 is not resolvable in double precision; "
            "use eigenvalue_zero_credibility_limit");
    return stable_quadratic_root(rf.kappa_eps, beta * q);
}

double eigenvalue_zero_credibility_limit(const ReducedForm& rf) {
    return 1.0 / (1.0 + rf.kappa_eps);
}

namespace {

void require_stable(double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("eigenvalue must lie in (0,1)");
}

}  // namespace

RuleParameters rule_parameters(double lambda, const ReducedForm& rf, double beta, double q,
                               double rho) {
    require_stable(lambda);
    const double f_pi = lambda / (1.0 - lambda) * rf.epsilon;
    const double f_u = -f_pi / (1.0 - beta * q * rho * lambda);
    return {f_pi, f_u};
}

CostateParameters costate_parameters(double lambda, double beta, double q, double rho) {
    require_stable(lambda);
    const double p_pi = 1.0 / (1.0 - lambda);
    const double p_u = p_pi * lambda / (beta * q * lambda * rho - 1.0);
    return {p_pi, p_u};
}

InitialAnchor initial_anchor(double lambda, double beta, double q, double rho,
                             double epsilon) {
    require_stable(lambda);
    const double anchor_pi = lambda / (1.0 - beta * q * rho * lambda);
    return {anchor_pi, -epsilon * anchor_pi};
}

Mat2 closed_loop_system(double lambda, double beta, double q, double rho) {
    require_stable(lambda);
    const double off = -lambda * (1.0 - rho) / (1.0 - beta * q * rho * lambda);
    return {lambda, off, 0.0, rho};
}

PolicySolution solve_quasi_commitment(const StructuralParams& p, double q) {
    const ReducedForm rf = slope_kappa(p);
    const double lambda = inflation_eigenvalue(rf, p.beta, q);
    const RuleParameters rule = rule_parameters(lambda, rf, p.beta, q, p.rho);
    const CostateParameters costate = costate_parameters(lambda, p.beta, q, p.rho);
    const InitialAnchor anchor = initial_anchor(lambda, p.beta, q, p.rho, p.epsilon);

    PolicySolution sol;
    sol.regime = Regime::QuasiCommitment;
    sol.q = q;
    sol.lambda = lambda;
    sol.f_pi = rule.f_pi;
    sol.f_u = rule.f_u;
    sol.p_pi = costate.p_pi;
    sol.p_u = costate.p_u;
    sol.anchor_pi = anchor.anchor_pi;
    sol.anchor_x = anchor.anchor_x;
    sol.closed_loop = closed_loop_system(lambda, p.beta, q, p.rho);
    return sol;
}

}  // namespace ramsey
