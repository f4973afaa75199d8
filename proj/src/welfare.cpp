#include "ramsey/welfare.hpp"

#include <stdexcept>

#include "ramsey/discretion.hpp"
#include "ramsey/quasi_commitment.hpp"

namespace ramsey {

double welfare_simulated(const IrfPath& path, double beta_household, double weight_x) {
    if (path.horizon < 1) throw std::domain_error("welfare requires horizon >= 1");
    if (path.meta.anchor_scale != 1.0)
        throw std::invalid_argument("welfare is evaluated on optimal-anchor paths");

    double loss = 0.0;
    double discount = 1.0;
    for (std::size_t t = 0; t < path.pi.size(); ++t) {
        loss += discount * (path.pi[t] * path.pi[t] + weight_x * path.x[t] * path.x[t]);
        discount *= beta_household;
    }
    return -0.5 * loss;
}

double welfare_discretion_closed_form(const ReducedForm& rf, double beta, double rho,
                                      double u0) {
    const double b = 1.0 + rf.kappa_eps;
    const double denom = b - beta * rho;
    return -0.5 * b / (denom * denom) * u0 * u0 / (1.0 - beta * rho * rho);
}

WelfareTable welfare_table(const StructuralParams& p, std::span<const double> eps_list,
                           std::span<const double> q_list, int T) {
    if (eps_list.empty()) throw std::domain_error("eps_list must not be empty");
    if (T < 1) throw std::domain_error("welfare horizon T must be at least 1");
    for (double q : q_list)
        if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("q must lie in [0,1]");

    WelfareTable table;
    table.rows.reserve(eps_list.size());

    for (double eps : eps_list) {
        StructuralParams row_params = p;
        row_params.epsilon = eps;

        WelfareRow row;
        row.epsilon = eps;

        bool have_benchmark = false;
        std::string benchmark_error;
        double weight_x = 0.0;
        try {
            const ReducedForm rf = slope_kappa(row_params);
            row.kappa = rf.kappa;
            row.weight_x = rf.weight_x;
            weight_x = rf.weight_x;

            const PolicySolution commit = solve_quasi_commitment(row_params, 1.0);
            const IrfPath path = impulse_response(commit, T, p.u0);
            row.W_commit = welfare_simulated(path, p.beta, weight_x);
            if (row.W_commit == 0.0)
                throw std::domain_error("relative loss undefined for a zero shock");
            have_benchmark = true;
        } catch (const std::exception& e) {
            benchmark_error = e.what();
        }

        for (double q : q_list) {
            WelfareCell cell;
            cell.q = q;
            if (!have_benchmark) {
                cell.error = "commitment benchmark failed: " + benchmark_error;
                row.entries.push_back(cell);
                continue;
            }
            try {
                const PolicySolution sol = (q == 0.0)
                                               ? solve_discretion(row_params)
                                               : solve_quasi_commitment(row_params, q);
                const IrfPath path = impulse_response(sol, T, p.u0);
                cell.W = welfare_simulated(path, p.beta, weight_x);
                cell.w = cell.W / row.W_commit - 1.0;
                cell.ok = true;
            } catch (const std::exception& e) {
                cell.error = e.what();
            }
            row.entries.push_back(cell);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace ramsey
