#include "ramsey/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "ramsey/bifurcation.hpp"
#include "ramsey/discretion.hpp"
#include "ramsey/quasi_commitment.hpp"
#include "ramsey/simulation.hpp"
#include "ramsey/welfare.hpp"

namespace ramsey {

bool VerifyReport::all_pass() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const Claim& c) { return c.pass; });
}

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Grids. The identity checks that involve division by beta*q run on the
// moderate grid only; everything sign- or bound-based also covers the
// near-zero decades where the bifurcation claim lives.
constexpr double kLogQ[] = {1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 0.1, 0.5, 1.0};
constexpr double kModerateQ[] = {0.1, 0.2, 0.3, 0.4, 0.55, 0.7, 0.85, 1.0};
constexpr double kEpsFd[] = {1.5, 2.35, 6.0, 50.0};
constexpr double kEpsWide[] = {1.001, 1.5, 2.35, 6.0, 50.0, 3193.0};
constexpr double kEpsTable[] = {3193.0, 6.0, 2.35, 1.001};

ReducedForm reduced_at(const StructuralParams& base, double eps) {
    StructuralParams p = base;
    p.epsilon = eps;
    return slope_kappa(p);
}

double lambda_at(const StructuralParams& base, double q, double eps) {
    const ReducedForm rf = reduced_at(base, eps);
    if (q == 0.0) return discretion_eigenvalue(rf, base.beta);
    return stable_quadratic_root(rf.kappa_eps, base.beta * q);
}

double fpi_at(const StructuralParams& base, double q, double eps) {
    if (q == 0.0) return -eps;
    const double lambda = lambda_at(base, q, eps);
    return lambda / (1.0 - lambda) * eps;
}

template <typename F>
double central_diff(F f, double at, double rel_step = 1e-6) {
    const double h = rel_step * at;
    return (f(at + h) - f(at - h)) / (2.0 * h);
}

Claim check_calibration(const StructuralParams& p) {
    const double eps_grid[] = {1.001, 2.0, 6.0, 50.0, 3193.0};
    const KappaEpsBounds bounds = kappa_eps_bounds(p);
    bool pass = true;
    double prev_kappa = bounds.lower + 1.0;  // above every kappa
    double prev_ke = 0.0;
    for (double eps : eps_grid) {
        const ReducedForm rf = reduced_at(p, eps);
        pass = pass && rf.kappa < prev_kappa && rf.kappa_eps > prev_ke;
        pass = pass && rf.kappa_eps > bounds.lower && rf.kappa_eps < bounds.upper;
        pass = pass && 0.0 < rf.weight_x && rf.weight_x < rf.kappa && rf.kappa < rf.kappa_max;
        prev_kappa = rf.kappa;
        prev_ke = rf.kappa_eps;
    }
    return {"calibration_slope_monotone", pass,
            "kappa decreasing, kappa*eps increasing within (" + num(bounds.lower) + ", " +
                num(bounds.upper) + ") over eps grid"};
}

Claim check_qc_bounds(const StructuralParams& p, const BoundReport& b) {
    double lo = 2.0, hi = 0.0;
    for (double eps : kEpsWide)
        for (double q : kLogQ) {
            const double lambda = lambda_at(p, q, eps);
            lo = std::min(lo, lambda);
            hi = std::max(hi, lambda);
        }
    const bool pass = b.lambda_min < lo && hi < b.lambda_sup_qc;
    return {"eigenvalue_bounds_quasi_commitment", pass,
            "lambda(q>0) in [" + num(lo) + ", " + num(hi) + "] within (" + num(b.lambda_min) +
                ", " + num(b.lambda_sup_qc) + ")"};
}

Claim check_disc_bounds(const StructuralParams& p, const BoundReport& b) {
    double lo = 1e300, hi = 0.0;
    for (double eps : kEpsWide) {
        const double lambda = lambda_at(p, 0.0, eps);
        lo = std::min(lo, lambda);
        hi = std::max(hi, lambda);
    }
    const bool pass = b.lambda_inf_disc < lo && hi < b.lambda_sup_disc;
    return {"eigenvalue_bounds_discretion", pass,
            "lambda(0) in [" + num(lo) + ", " + num(hi) + "] within (" + num(b.lambda_inf_disc) +
                ", " + num(b.lambda_sup_disc) + ")"};
}

Claim check_bifurcation_gap(const StructuralParams& p, const BoundReport& b) {
    double hi_qc = 0.0, lo_disc = 1e300;
    for (double eps : kEpsWide) {
        for (double q : kLogQ) hi_qc = std::max(hi_qc, lambda_at(p, q, eps));
        lo_disc = std::min(lo_disc, lambda_at(p, 0.0, eps));
    }
    const bool pass = hi_qc < 1.0 && 1.0 < lo_disc && b.lambda_sup_qc < 1.0 &&
                      1.0 < b.lambda_inf_disc;
    return {"bifurcation_gap", pass,
            "sup lambda(q>0) = " + num(hi_qc) + " < 1 < " + num(lo_disc) +
                " = inf lambda(0)"};
}

Claim check_lambda_q_monotone(const StructuralParams& p) {
    bool pass = true;
    double worst = -1e300;
    for (double eps : kEpsFd)
        for (double q : kModerateQ) {
            const double d = central_diff([&](double v) { return lambda_at(p, v, eps); }, q);
            worst = std::max(worst, d);
            pass = pass && d < 0.0;
        }
    // Adjacent pairs across the log grid, q = 0 included via the regime jump.
    for (double eps : kEpsWide) {
        double prev = lambda_at(p, 0.0, eps);
        for (double q : kLogQ) {
            const double lambda = lambda_at(p, q, eps);
            pass = pass && lambda < prev;
            prev = lambda;
        }
    }
    return {"eigenvalue_decreasing_in_credibility", pass,
            "max dlambda/dq = " + num(worst) + " (< 0 required)"};
}

Claim check_lambda_eps_sign(const StructuralParams& p) {
    bool pass = true;
    double worst_qc = -1e300, worst_disc = 1e300;
    for (double eps : kEpsFd) {
        for (double q : kModerateQ) {
            const double d = central_diff([&](double v) { return lambda_at(p, q, v); }, eps);
            worst_qc = std::max(worst_qc, d);
            pass = pass && d < 0.0;
        }
        const double d0 = central_diff([&](double v) { return lambda_at(p, 0.0, v); }, eps);
        worst_disc = std::min(worst_disc, d0);
        pass = pass && d0 > 0.0;
    }
    return {"eigenvalue_elasticity_slopes", pass,
            "max dlambda/deps|qc = " + num(worst_qc) + " < 0 < min dlambda/deps|disc = " +
                num(worst_disc)};
}

Claim check_rule_sign_qc(const StructuralParams& p) {
    double lo = 1e300;
    for (double eps : kEpsWide)
        for (double q : kLogQ) lo = std::min(lo, fpi_at(p, q, eps));
    const bool pass = lo > 0.0;
    return {"rule_sign_quasi_commitment", pass,
            "min f_pi(q>0) = " + num(lo) + "; feedback -kappa/(beta q) f_pi < 0 everywhere"};
}

Claim check_rule_fd(const StructuralParams& p) {
    bool pass = true;
    double worst_eps = 1.0;
    for (double eps : kEpsFd)
        for (double q : kModerateQ) {
            const double d = central_diff([&](double v) { return fpi_at(p, q, v); }, eps);
            worst_eps = std::min(worst_eps, d);
            pass = pass && d > 0.0;
        }
    for (double eps : kEpsFd) {
        double prev = fpi_at(p, kLogQ[0], eps);
        for (std::size_t i = 1; i < std::size(kLogQ); ++i) {
            const double cur = fpi_at(p, kLogQ[i], eps);
            pass = pass && cur < prev;
            prev = cur;
        }
    }
    return {"rule_monotonicity", pass,
            "min df_pi/deps = " + num(worst_eps) + " (> 0); f_pi decreasing across q grid"};
}

Claim check_rule_disc(const StructuralParams& p) {
    bool pass = true;
    double prev = -1.0;
    for (double eps : kEpsWide) {
        const double f = fpi_at(p, 0.0, eps);
        pass = pass && f == -eps && f < -1.0 && f < prev;
        prev = f;
    }
    return {"rule_sign_discretion", pass,
            "f_pi(0,eps) = -eps < -1, decreasing in eps"};
}

Claim check_anchor_order(const StructuralParams& p) {
    std::vector<double> q_grid(std::begin(kLogQ), std::end(kLogQ));
    q_grid.insert(q_grid.begin(), 0.0);
    const AnchorComparison cmp = anchor_comparison(p, q_grid, kEpsWide);
    const bool pass = cmp.increasing_in_q && cmp.decreasing_in_eps && cmp.below_discretion;
    return {"anchor_ordering", pass,
            std::string("increasing in q: ") + (cmp.increasing_in_q ? "yes" : "NO") +
                ", decreasing in eps: " + (cmp.decreasing_in_eps ? "yes" : "NO") +
                ", below discretion: " + (cmp.below_discretion ? "yes" : "NO")};
}

Claim check_saddle_node(const StructuralParams& p) {
    bool pass = true;
    double worst = 0.0;
    for (double eps : kEpsWide) {
        const ReducedForm rf = reduced_at(p, eps);
        const double limit = eigenvalue_zero_credibility_limit(rf);
        const double near_zero = lambda_at(p, kLogQ[0], eps);
        const double err = std::abs(near_zero - limit);
        worst = std::max(worst, err);
        pass = pass && err < 1e-4;
        const double jump = lambda_at(p, 0.0, eps) - near_zero;
        pass = pass && jump > (1.0 + rf.kappa_eps) / p.beta - limit - 1e-4;
    }
    return {"saddle_node_limit", pass,
            "max |lambda(q->0+) - 1/(1+kappa eps)| = " + num(worst) + " (< 1e-4)"};
}

Claim check_functional_inequality(const StructuralParams& p) {
    double worst = 0.0;
    for (double eps : kEpsWide)
        for (double q : kLogQ) {
            const ReducedForm rf = reduced_at(p, eps);
            worst = std::max(worst, (1.0 + rf.kappa_eps) * lambda_at(p, q, eps));
        }
    const bool pass = worst < 1.0;
    return {"functional_inequality", pass,
            "1 - max (1+kappa eps) lambda = " + num(1.0 - worst) + " (> 0)"};
}

Claim check_characteristic_polynomial(const StructuralParams& p) {
    double worst_res = 0.0, worst_sum = 0.0, worst_prod = 0.0;
    for (double eps : kEpsWide)
        for (double q : kLogQ) {
            const ReducedForm rf = reduced_at(p, eps);
            const double bq = p.beta * q;
            const double c = 1.0 / bq;
            const double b = 1.0 + c + rf.kappa_eps * c;
            const double lambda = stable_quadratic_root(rf.kappa_eps, bq);
            const double unstable = c / lambda;  // root product / stable root

            const double res = std::abs(lambda * lambda - b * lambda + c) /
                               (lambda * lambda + b * lambda + c);
            const double sum_err = std::abs((lambda + unstable) - b) / b;
            const double prod_err = std::abs(lambda * unstable - c) / c;
            worst_res = std::max(worst_res, res);
            worst_sum = std::max(worst_sum, sum_err);
            worst_prod = std::max(worst_prod, prod_err);
        }
    const bool pass = worst_res < 1e-12 && worst_sum < 1e-10 && worst_prod < 1e-10;
    return {"characteristic_polynomial_roots", pass,
            "residual " + num(worst_res) + ", sum " + num(worst_sum) + ", product " +
                num(worst_prod)};
}

Claim check_rule_identities(const StructuralParams& p) {
    double worst = 0.0;
    for (double eps : kEpsWide)
        for (double q : kLogQ) {
            const ReducedForm rf = reduced_at(p, eps);
            const double lambda = lambda_at(p, q, eps);
            const RuleParameters rule = rule_parameters(lambda, rf, p.beta, q, p.rho);
            const CostateParameters cs = costate_parameters(lambda, p.beta, q, p.rho);

            const double alt[] = {eps * (cs.p_pi - 1.0), eps * lambda * cs.p_pi,
                                  (1.0 - p.beta * q * lambda) / rf.kappa};
            for (double v : alt)
                worst = std::max(worst, std::abs(v - rule.f_pi) / std::abs(rule.f_pi));
            worst = std::max(worst,
                             std::abs(eps * cs.p_u - rule.f_u) / std::abs(rule.f_u));
            const double ratio = 1.0 / (p.beta * q * p.rho * lambda - 1.0);
            worst = std::max(worst,
                             std::abs(rule.f_u / rule.f_pi - ratio) / std::abs(ratio));
        }
    // lambda = 1/(beta q) - kappa/(beta q) f_pi amplifies rounding by 1/(beta q),
    // so the literal form is checked on the moderate grid only.
    for (double eps : kEpsFd)
        for (double q : kModerateQ) {
            const ReducedForm rf = reduced_at(p, eps);
            const double lambda = lambda_at(p, q, eps);
            const double f_pi = fpi_at(p, q, eps);
            const double bq = p.beta * q;
            const double recovered = 1.0 / bq - rf.kappa / bq * f_pi;
            worst = std::max(worst, std::abs(recovered - lambda) / lambda);
        }
    const bool pass = worst < 1e-10;
    return {"rule_costate_identities", pass, "max relative mismatch " + num(worst)};
}

Claim check_euler_phillips(const StructuralParams& p, double u0) {
    double worst_euler = 0.0, worst_phillips = 0.0;
    for (double q : {1.0, 0.5}) {
        const PolicySolution sol = solve_quasi_commitment(p, q);
        const IrfPath path = impulse_response(sol, 40, u0);
        for (double r : euler_residuals(path, sol, p.epsilon))
            worst_euler = std::max(worst_euler, std::abs(r));
        if (q == 1.0) {
            const ReducedForm rf = slope_kappa(p);
            for (int t = 0; t < 40; ++t) {
                const double res = path.pi[t] - rf.kappa * path.x[t] -
                                   p.beta * path.pi[t + 1] - path.u[t];
                worst_phillips = std::max(worst_phillips, std::abs(res));
            }
        }
    }
    const bool pass = worst_euler < 1e-8 && worst_phillips < 1e-8;
    return {"euler_phillips_residuals", pass,
            "max Euler " + num(worst_euler) + ", max Phillips " + num(worst_phillips) +
                " (< 1e-8)"};
}

Claim check_discretion_paths(const StructuralParams& p, double u0) {
    const PolicySolution sol = solve_discretion(p);
    const IrfPath path = impulse_response(sol, 12, u0);
    bool pass = true;
    double worst_ratio = 0.0;
    for (int t = 0; t + 1 <= 12; ++t) {
        const double err = std::abs(path.pi[t + 1] / path.pi[t] - p.rho);
        worst_ratio = std::max(worst_ratio, err);
        pass = pass && err < 1e-10;
    }
    // Off the eigenvector the deviation grows at the unstable eigenvalue.
    double pi = 1.1 * sol.anchor_pi * u0, u = u0;
    double dev_prev = pi - sol.anchor_pi * u;
    for (int t = 0; t < 10; ++t) {
        const double next_pi = sol.closed_loop.m00 * pi + sol.closed_loop.m01 * u;
        u *= p.rho;
        pi = next_pi;
        const double dev = pi - sol.anchor_pi * u;
        const double growth = dev / dev_prev;
        pass = pass && std::abs(growth - sol.lambda) < 1e-6 * sol.lambda;
        dev_prev = dev;
    }
    return {"discretion_eigenvector_closure", pass,
            "max |pi[t+1]/pi[t] - rho| = " + num(worst_ratio) +
                " (< 1e-10); off-eigenvector growth = lambda(0)"};
}

Claim check_irf_ranking(const StructuralParams& p) {
    StructuralParams pp = p;
    pp.u0 = 1.0;
    const IrfPath disc = impulse_response(solve_discretion(pp), 12, 1.0);
    bool pass = true;
    double min_gap = 1e300;
    for (double q : {1e-7, 0.5, 1.0}) {
        const IrfPath qc = impulse_response(solve_quasi_commitment(pp, q), 12, 1.0);
        for (int t = 0; t <= 12; ++t) {
            const double gap = disc.pi[t] - qc.pi[t];
            min_gap = std::min(min_gap, gap);
            pass = pass && gap >= 0.0;
        }
    }
    return {"irf_discretion_dominates", pass,
            "min (pi_disc - pi_qc) = " + num(min_gap) + " (>= 0)"};
}

Claim check_welfare_closed_form(const StructuralParams& p, double u0) {
    const ReducedForm rf = slope_kappa(p);
    const PolicySolution sol = solve_discretion(p);
    const IrfPath path = impulse_response(sol, 200, u0);
    const double simulated = welfare_simulated(path, p.beta, rf.weight_x);
    const double exact = welfare_discretion_closed_form(rf, p.beta, p.rho, u0);
    const double rel = std::abs(simulated - exact) / std::abs(exact);
    return {"welfare_closed_form_agreement", rel < 1e-10,
            "relative gap " + num(rel) + " (< 1e-10)"};
}

Claim check_welfare_dominance(const StructuralParams& p, double u0) {
    bool pass = true;
    double worst_margin = 1e300;
    for (double eps : kEpsTable) {
        StructuralParams pe = p;
        pe.epsilon = eps;
        const ReducedForm rf = slope_kappa(pe);
        const double W0 = welfare_simulated(impulse_response(solve_discretion(pe), 200, u0),
                                            p.beta, rf.weight_x);
        for (double q : {1e-7, 0.1, 0.5, 0.8, 1.0}) {
            const double Wq = welfare_simulated(
                impulse_response(solve_quasi_commitment(pe, q), 200, u0), p.beta, rf.weight_x);
            worst_margin = std::min(worst_margin, Wq - W0);
            pass = pass && W0 < Wq;
        }
    }
    return {"welfare_discretion_dominated", pass,
            "min W(q) - W(0) = " + num(worst_margin) + " (> 0)"};
}

Claim check_welfare_ratio_invariance(const StructuralParams& p) {
    bool pass = true;
    double worst = 0.0;
    const double scales[] = {0.5, 1.0, std::sqrt(2.0)};
    for (double q : {0.0, 0.5}) {
        double reference = 0.0;
        bool first = true;
        for (double u0 : scales) {
            StructuralParams pu = p;
            pu.u0 = u0;
            const ReducedForm rf = slope_kappa(pu);
            const PolicySolution sol =
                (q == 0.0) ? solve_discretion(pu) : solve_quasi_commitment(pu, q);
            const double Wq = welfare_simulated(impulse_response(sol, 200, u0), p.beta,
                                                rf.weight_x);
            const double W1 = welfare_simulated(
                impulse_response(solve_quasi_commitment(pu, 1.0), 200, u0), p.beta,
                rf.weight_x);
            const double ratio = Wq / W1 - 1.0;
            if (first) {
                reference = ratio;
                first = false;
            } else {
                worst = std::max(worst, std::abs(ratio - reference));
                pass = pass && std::abs(ratio - reference) < 1e-9;
            }
        }
    }
    return {"welfare_ratio_u0_invariance", pass,
            "max ratio drift across u0 scales = " + num(worst) + " (< 1e-9)"};
}

Claim check_static_optimum(const StructuralParams& p) {
    const ReducedForm rf = slope_kappa(p);
    std::mt19937 rng(20210143u);
    std::uniform_real_distribution<double> draw(0.25, 2.0);
    std::bernoulli_distribution flip(0.5);

    bool pass = true;
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const double c = (flip(rng) ? 1.0 : -1.0) * draw(rng);
        const auto loss = [&](double x) {
            const double pi = rf.kappa * x + c;
            return 0.5 * (pi * pi + rf.weight_x * x * x);
        };
        double lo = -4.0 * p.epsilon * std::abs(c), hi = 4.0 * p.epsilon * std::abs(c);
        double best = 0.0;
        for (int pass_idx = 0; pass_idx < 6; ++pass_idx) {
            const double step = (hi - lo) / 1000.0;
            double best_val = 1e300;
            for (int i = 0; i <= 1000; ++i) {
                const double x = lo + step * i;
                const double v = loss(x);
                if (v < best_val) {
                    best_val = v;
                    best = x;
                }
            }
            lo = best - 2.0 * step;
            hi = best + 2.0 * step;
        }
        // Minimizer must satisfy the proportional rule x = -eps * pi.
        const double rule_gap =
            std::abs(best + p.epsilon * (rf.kappa * best + c)) / std::max(1.0, std::abs(best));
        worst = std::max(worst, rule_gap);
        pass = pass && rule_gap < 1e-4;
    }
    return {"discretion_static_optimum", pass,
            "max |x* + eps*pi*| = " + num(worst) + " (< 1e-4, 5 random intercepts)"};
}

}  // namespace

VerifyReport run_verification(const StructuralParams& p) {
    validate(p);
    const double u0 = p.u0 != 0.0 ? p.u0 : 1.0;
    const BoundReport bounds = bound_report(p);

    VerifyReport report;
    report.claims.push_back(check_calibration(p));
    report.claims.push_back(check_qc_bounds(p, bounds));
    report.claims.push_back(check_disc_bounds(p, bounds));
    report.claims.push_back(check_bifurcation_gap(p, bounds));
    report.claims.push_back(check_lambda_q_monotone(p));
    report.claims.push_back(check_lambda_eps_sign(p));
    report.claims.push_back(check_rule_sign_qc(p));
    report.claims.push_back(check_rule_fd(p));
    report.claims.push_back(check_rule_disc(p));
    report.claims.push_back(check_anchor_order(p));
    report.claims.push_back(check_saddle_node(p));
    report.claims.push_back(check_functional_inequality(p));
    report.claims.push_back(check_characteristic_polynomial(p));
    report.claims.push_back(check_rule_identities(p));
    report.claims.push_back(check_euler_phillips(p, u0));
    report.claims.push_back(check_discretion_paths(p, u0));
    report.claims.push_back(check_irf_ranking(p));
    report.claims.push_back(check_welfare_closed_form(p, u0));
    report.claims.push_back(check_welfare_dominance(p, u0));
    report.claims.push_back(check_welfare_ratio_invariance(p));
    report.claims.push_back(check_static_optimum(p));
    return report;
}

}  // namespace ramsey
