#pragma once

#include <span>
#include <string>
#include <vector>

#include "ramsey/calibration.hpp"
#include "ramsey/simulation.hpp"

namespace ramsey {

// Discounted loss -1/2 * sum_t beta_household^t (pi_t^2 + weight_x * x_t^2)
// over the whole path. Welfare is always evaluated with the household
// discount factor, not the credibility-adjusted one.
double welfare_simulated(const IrfPath& path, double beta_household, double weight_x);

// Exact discretion welfare for an AR(1) shock:
//   W(0) = -1/2 * (1+kappa*eps) / (1+kappa*eps-beta*rho)^2 * u0^2/(1-beta*rho^2)
double welfare_discretion_closed_form(const ReducedForm& rf, double beta, double rho,
                                      double u0);

struct WelfareCell {
    double q = 0.0;
    double W = 0.0;
    double w = 0.0;  // W(q)/W(1) - 1
    bool ok = false;
    std::string error;  // solver failure for this cell, if any
};

struct WelfareRow {
    double epsilon = 0.0;
    double kappa = 0.0;
    double weight_x = 0.0;
    double W_commit = 0.0;  // W(1), the full-commitment benchmark
    std::vector<WelfareCell> entries;
};

struct WelfareTable {
    std::vector<WelfareRow> rows;
};

// One row per epsilon, one cell per q. q = 0 cells use the discretion
// solver. Cell-level solver failures are recorded in the cell and do not
// abort the table.
WelfareTable welfare_table(const StructuralParams& p, std::span<const double> eps_list,
                           std::span<const double> q_list, int T = 200);

}  // namespace ramsey
