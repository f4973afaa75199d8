#include "ramsey/simulation.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace ramsey {

IrfPath impulse_response(const PolicySolution& sol, int horizon, double u0,
                         double anchor_scale) {
    if (horizon < 0) throw std::domain_error("horizon must be nonnegative");
    if (!(anchor_scale > 0.0)) throw std::domain_error("anchor_scale must be positive");

    const std::size_t n = static_cast<std::size_t>(horizon) + 1;
    IrfPath path;
    path.horizon = horizon;
    path.pi.resize(n);
    path.x.resize(n);
    path.u.resize(n);
    path.meta = {sol.regime, sol.q, anchor_scale, sol.anchor_pi, u0};

    const double rho = sol.closed_loop.m11;
    path.u[0] = u0;
    for (std::size_t t = 1; t < n; ++t) path.u[t] = rho * path.u[t - 1];

    if (sol.regime == Regime::QuasiCommitment) {
        // Stable loop: iterate directly.
        path.pi[0] = anchor_scale * sol.anchor_pi * u0;
        for (std::size_t t = 1; t < n; ++t)
            path.pi[t] = sol.closed_loop.m00 * path.pi[t - 1] +
                         sol.closed_loop.m01 * path.u[t - 1];
    } else {
        // Exact orbit: determinate eigenvector component plus the anchor
        // misspecification carried by the unstable eigenvalue.
        const double deviation0 = (anchor_scale - 1.0) * sol.anchor_pi * u0;
        double growth = 1.0;  // lambda^t
        for (std::size_t t = 0; t < n; ++t) {
            path.pi[t] = sol.anchor_pi * path.u[t] + deviation0 * growth;
            growth *= sol.closed_loop.m00;
        }
    }

    for (std::size_t t = 0; t < n; ++t)
        path.x[t] = sol.f_pi * path.pi[t] + sol.f_u * path.u[t];
    return path;
}

RobustnessResult robustness_experiment(const PolicySolution& sol, int horizon, double u0,
                                       double error) {
    if (!(std::abs(error) < 1.0)) throw std::domain_error("anchor error must satisfy |error| < 1");

    RobustnessResult result;
    result.baseline = impulse_response(sol, horizon, u0, 1.0);
    result.perturbed = impulse_response(sol, horizon, u0, 1.0 + error);

    const double denom = std::abs(result.baseline.pi[0]);
    result.rel_gap.resize(result.baseline.pi.size());
    for (std::size_t t = 0; t < result.rel_gap.size(); ++t) {
        const double diff = std::abs(result.perturbed.pi[t] - result.baseline.pi[t]);
        if (denom == 0.0) {
            if (diff != 0.0)
                throw std::domain_error("relative gap undefined: zero baseline anchor");
            result.rel_gap[t] = 0.0;
        } else {
            result.rel_gap[t] = diff / denom;
        }
    }
    return result;
}

std::vector<double> euler_residuals(const IrfPath& path, const PolicySolution& sol,
                                    double epsilon) {
    if (sol.regime == Regime::Discretion)
        throw std::invalid_argument("Euler equation does not apply to discretion paths");
    if (path.meta.anchor_scale != 1.0)
        throw std::invalid_argument("Euler residuals require the optimal anchor");

    std::vector<double> residuals(path.pi.size());
    residuals[0] = path.x[0] + epsilon * path.pi[0];  // transversality: x0 = -eps*pi0
    for (std::size_t t = 1; t < residuals.size(); ++t)
        residuals[t] = path.x[t] - path.x[t - 1] + epsilon * path.pi[t];
    return residuals;
}

}  // namespace ramsey
