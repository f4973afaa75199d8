#pragma once

#include <span>
#include <vector>

#include "ramsey/calibration.hpp"

namespace ramsey {

enum class RegimeClass {
    Stable,   // |lambda| < 1, every q > 0
    Unstable  // |lambda| > 1, q = 0
};

struct ScanPoint {
    double q;
    double epsilon;
    double lambda;
    double f_pi;
    double anchor_pi;
    RegimeClass regime_class;
};

struct ScanResult {
    std::vector<ScanPoint> points;  // epsilon-major, q-minor, in grid order
    // Monotonicity over the sorted grids:
    bool lambda_decreasing_in_q;         // strict, at fixed epsilon, q include 0
    bool lambda_decreasing_in_eps_qc;    // strict, at fixed q > 0
    bool lambda_increasing_in_eps_disc;  // strict, at q = 0
};

// Eigenvalue, rule response and anchor over a (q, epsilon) grid with
// stability classification. q = 0 entries come from the discretion solver.
ScanResult eigenvalue_scan(const StructuralParams& p, std::span<const double> q_grid,
                           std::span<const double> eps_grid);

// Epsilon-uniform eigenvalue bounds:
//   lambda_min < lambda(q,eps) < 1/(1+kappa_max) < 1
//             < (1+kappa_max)/beta < lambda(0,eps) < (1+kappa_max/alpha_L)/beta
struct BoundReport {
    double lambda_min;       // stable root at beta*q = beta, kappa*eps = kappa_max/alpha_L
    double lambda_sup_qc;    // 1/(1+kappa_max)
    double lambda_inf_disc;  // (1+kappa_max)/beta
    double lambda_sup_disc;  // (1+kappa_max/alpha_L)/beta
};
BoundReport bound_report(const StructuralParams& p);

struct AnchorPoint {
    double q;
    double epsilon;
    double anchor_pi;
};

struct AnchorComparison {
    std::vector<AnchorPoint> points;
    bool increasing_in_q;    // strict over q > 0 at fixed epsilon
    bool decreasing_in_eps;  // strict at fixed q (including q = 0)
    bool below_discretion;   // anchor(q,eps) < anchor(0,eps) for every q > 0
};

// Initial inflation anchors pi_0/u_0 over the grid, with the monotonicity
// and gap flags the anchor claims assert.
AnchorComparison anchor_comparison(const StructuralParams& p, std::span<const double> q_grid,
                                   std::span<const double> eps_grid);

}  // namespace ramsey
