#pragma once

#include <vector>

#include "ramsey/solution.hpp"

namespace ramsey {

struct IrfMeta {
    Regime regime;
    double q;
    double anchor_scale;  // 1.0 = optimal anchor
    double anchor_pi;     // per-unit-shock anchor of the solution
    double u0;
};

// Deterministic impulse-response path. All sequences have length horizon+1
// and u satisfies u[t+1] = rho*u[t] exactly (bit-level recurrence).
struct IrfPath {
    int horizon;
    std::vector<double> pi;
    std::vector<double> x;
    std::vector<double> u;
    IrfMeta meta;
};

// pi[0] = anchor_scale * anchor_pi * u0, then (pi, u) follow the closed
// loop; x comes from the policy rule. Under discretion the path is generated
// from the exact orbit pi[t] = c_pi*u[t] + (anchor_scale-1)*c_pi*u0*lambda^t
// rather than by repeated multiplication: the unstable eigenvalue amplifies
// rounding noise by lambda^t, which would swamp long paths.
IrfPath impulse_response(const PolicySolution& sol, int horizon, double u0,
                         double anchor_scale = 1.0);

struct RobustnessResult {
    IrfPath baseline;             // anchor_scale = 1
    IrfPath perturbed;            // anchor_scale = 1 + error
    std::vector<double> rel_gap;  // |perturbed.pi[t]-baseline.pi[t]| / |baseline.pi[0]|
};

// Misspecified-anchor experiment, |error| < 1. The gap is normalized by the
// initial optimal anchor, so it decays at rate lambda under quasi-commitment
// and grows at the unstable eigenvalue under discretion.
RobustnessResult robustness_experiment(const PolicySolution& sol, int horizon, double u0,
                                       double error);

// Residuals of the policy maker's Euler equation x_t = x_{t-1} - epsilon*pi_t.
// Entry 0 holds the transversality residual x[0] + epsilon*pi[0]. Only valid
// on quasi-commitment paths with the optimal anchor.
std::vector<double> euler_residuals(const IrfPath& path, const PolicySolution& sol,
                                    double epsilon);

}  // namespace ramsey
