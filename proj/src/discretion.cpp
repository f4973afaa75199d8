#include "ramsey/discretion.hpp"

#include <stdexcept>

namespace ramsey {

RuleParameters discretion_rule(double epsilon) {
    if (!(epsilon > 1.0)) throw std::domain_error("parameter out of range: epsilon > 1");
    return {-epsilon, 0.0};
}

double discretion_eigenvalue(const ReducedForm& rf, double beta) {
    return (1.0 + rf.kappa_eps) / beta;
}

DeterminateSolution determinate_solution(const ReducedForm& rf, double beta, double rho) {
    const double c_pi = 1.0 / (1.0 - beta * rho + rf.kappa_eps);
    return {c_pi, -rf.epsilon * c_pi};
}

Mat2 discretion_closed_loop(const ReducedForm& rf, double beta, double rho) {
    return {discretion_eigenvalue(rf, beta), -1.0 / beta, 0.0, rho};
}

PolicySolution solve_discretion(const StructuralParams& p) {
    const ReducedForm rf = slope_kappa(p);
    const RuleParameters rule = discretion_rule(p.epsilon);
    const DeterminateSolution det = determinate_solution(rf, p.beta, p.rho);

    PolicySolution sol;
    sol.regime = Regime::Discretion;
    sol.q = 0.0;
    sol.lambda = discretion_eigenvalue(rf, p.beta);
    sol.f_pi = rule.f_pi;
    sol.f_u = rule.f_u;
    sol.p_pi = std::nullopt;
    sol.p_u = std::nullopt;
    sol.anchor_pi = det.c_pi;
    sol.anchor_x = det.c_x;
    sol.closed_loop = discretion_closed_loop(rf, p.beta, p.rho);
    return sol;
}

}  // namespace ramsey
