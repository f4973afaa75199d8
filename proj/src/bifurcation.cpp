#include "ramsey/bifurcation.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramsey/discretion.hpp"
#include "ramsey/quasi_commitment.hpp"

namespace ramsey {

namespace {

struct PointValues {
    double lambda;
    double f_pi;
    double anchor_pi;
};

PointValues evaluate_point(const StructuralParams& base, double q, double eps) {
    StructuralParams p = base;
    p.epsilon = eps;
    const ReducedForm rf = slope_kappa(p);
    if (q == 0.0) {
        const DeterminateSolution det = determinate_solution(rf, p.beta, p.rho);
        return {discretion_eigenvalue(rf, p.beta), discretion_rule(eps).f_pi, det.c_pi};
    }
    const double lambda = inflation_eigenvalue(rf, p.beta, q);
    const RuleParameters rule = rule_parameters(lambda, rf, p.beta, q, p.rho);
    const InitialAnchor anchor = initial_anchor(lambda, p.beta, q, p.rho, eps);
    return {lambda, rule.f_pi, anchor.anchor_pi};
}

void check_grids(std::span<const double> q_grid, std::span<const double> eps_grid) {
    if (q_grid.empty() || eps_grid.empty())
        throw std::domain_error("scan grids must not be empty");
    for (double q : q_grid)
        if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("q must lie in [0,1]");
    for (double eps : eps_grid)
        if (!(eps > 1.0)) throw std::domain_error("parameter out of range: epsilon > 1");
}

std::vector<double> sorted_unique(std::span<const double> grid) {
    std::vector<double> v(grid.begin(), grid.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return true;
}

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) return false;
    return true;
}

}  // namespace

ScanResult eigenvalue_scan(const StructuralParams& p, std::span<const double> q_grid,
                           std::span<const double> eps_grid) {
    validate_ignoring_epsilon(p);
    check_grids(q_grid, eps_grid);

    ScanResult result;
    result.points.reserve(q_grid.size() * eps_grid.size());
    for (double eps : eps_grid) {
        for (double q : q_grid) {
            const PointValues v = evaluate_point(p, q, eps);
            result.points.push_back({q, eps, v.lambda, v.f_pi, v.anchor_pi,
                                     q > 0.0 ? RegimeClass::Stable : RegimeClass::Unstable});
        }
    }

    const std::vector<double> qs = sorted_unique(q_grid);
    const std::vector<double> epss = sorted_unique(eps_grid);

    // lambda falls as credibility rises; the q = 0 point sits above them all.
    result.lambda_decreasing_in_q = true;
    for (double eps : epss) {
        std::vector<double> lambdas;
        for (double q : qs) lambdas.push_back(evaluate_point(p, q, eps).lambda);
        if (!strictly_decreasing(lambdas)) result.lambda_decreasing_in_q = false;
    }

    result.lambda_decreasing_in_eps_qc = true;
    result.lambda_increasing_in_eps_disc = true;
    for (double q : qs) {
        std::vector<double> lambdas;
        for (double eps : epss) lambdas.push_back(evaluate_point(p, q, eps).lambda);
        if (q > 0.0) {
            if (!strictly_decreasing(lambdas)) result.lambda_decreasing_in_eps_qc = false;
        } else {
            if (!strictly_increasing(lambdas)) result.lambda_increasing_in_eps_disc = false;
        }
    }
    return result;
}

BoundReport bound_report(const StructuralParams& p) {
    const KappaEpsBounds bounds = kappa_eps_bounds(p);
    BoundReport report;
    report.lambda_min = stable_quadratic_root(bounds.upper, p.beta);
    report.lambda_sup_qc = 1.0 / (1.0 + bounds.lower);
    report.lambda_inf_disc = (1.0 + bounds.lower) / p.beta;
    report.lambda_sup_disc = (1.0 + bounds.upper) / p.beta;
    return report;
}

AnchorComparison anchor_comparison(const StructuralParams& p, std::span<const double> q_grid,
                                   std::span<const double> eps_grid) {
    validate_ignoring_epsilon(p);
    check_grids(q_grid, eps_grid);

    AnchorComparison cmp;
    cmp.points.reserve(q_grid.size() * eps_grid.size());
    for (double eps : eps_grid)
        for (double q : q_grid)
            cmp.points.push_back({q, eps, evaluate_point(p, q, eps).anchor_pi});

    const std::vector<double> qs = sorted_unique(q_grid);
    const std::vector<double> epss = sorted_unique(eps_grid);

    cmp.increasing_in_q = true;
    cmp.below_discretion = true;
    for (double eps : epss) {
        std::vector<double> positive_q_anchors;
        for (double q : qs)
            if (q > 0.0) positive_q_anchors.push_back(evaluate_point(p, q, eps).anchor_pi);
        if (!strictly_increasing(positive_q_anchors)) cmp.increasing_in_q = false;

        if (std::find(qs.begin(), qs.end(), 0.0) != qs.end() && !positive_q_anchors.empty()) {
            const double disc_anchor = evaluate_point(p, 0.0, eps).anchor_pi;
            const double max_qc =
                *std::max_element(positive_q_anchors.begin(), positive_q_anchors.end());
            if (!(max_qc < disc_anchor)) cmp.below_discretion = false;
        }
    }

    cmp.decreasing_in_eps = true;
    for (double q : qs) {
        std::vector<double> anchors;
        for (double eps : epss) anchors.push_back(evaluate_point(p, q, eps).anchor_pi);
        if (!strictly_decreasing(anchors)) cmp.decreasing_in_eps = false;
    }
    return cmp;
}

}  // namespace ramsey
