#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ramsey/calibration.hpp"
#include "ramsey/discretion.hpp"
#include "ramsey/quasi_commitment.hpp"
#include "ramsey/simulation.hpp"
#include "ramsey/welfare.hpp"
#include "test_helpers.hpp"

using namespace ramsey;

namespace {

const StructuralParams kGali = gali2015();

// Independent oracle: rebuild the path from the solution primitives and
// accumulate the discounted loss in extended precision.
double brute_force_welfare(const PolicySolution& sol, int T, double u0, double beta,
                           double weight_x) {
    long double sum = 0.0L;
    long double discount = 1.0L;
    double pi = sol.anchor_pi * u0;
    double u = u0;
    for (int t = 0; t <= T; ++t) {
        const double x = sol.f_pi * pi + sol.f_u * u;
        sum += discount * (static_cast<long double>(pi) * pi +
                           static_cast<long double>(weight_x) * x * x);
        discount *= beta;
        if (sol.regime == Regime::QuasiCommitment) {
            const double next_pi = sol.closed_loop.m00 * pi + sol.closed_loop.m01 * u;
            u *= sol.closed_loop.m11;
            pi = next_pi;
        } else {
            u *= sol.closed_loop.m11;
            pi = sol.anchor_pi * u;  // determinate orbit
        }
    }
    return static_cast<double>(-0.5L * sum);
}

}  // namespace

TEST_CASE("zero shock gives zero welfare loss") {
    const PolicySolution sol = solve_quasi_commitment(kGali, 1.0);
    const ReducedForm rf = slope_kappa(kGali);
    const IrfPath path = impulse_response(sol, 200, 0.0);
    CHECK(welfare_simulated(path, kGali.beta, rf.weight_x) == 0.0);
}

TEST_CASE("discretion welfare equals its closed form") {
    const ReducedForm rf = slope_kappa(kGali);
    const PolicySolution sol = solve_discretion(kGali);
    const IrfPath path = impulse_response(sol, 200, 1.0);
    const double simulated = welfare_simulated(path, kGali.beta, rf.weight_x);
    const double exact = welfare_discretion_closed_form(rf, kGali.beta, kGali.rho, 1.0);

    CHECK(approx_rel(simulated, exact, 1e-10));
    CHECK(approx_rel(exact, -2.5440964299135573, 1e-12));
    CHECK(approx_abs(exact, -2.544, 1e-3));
}

TEST_CASE("closed-form edge values") {
    const ReducedForm rf = slope_kappa(kGali);
    CHECK(welfare_discretion_closed_form(rf, kGali.beta, kGali.rho, 0.0) == 0.0);

    // rho = 0 and kappa*eps -> 0 collapse to a single-period unit loss.
    ReducedForm degenerate = rf;
    degenerate.kappa_eps = 0.0;
    CHECK(welfare_discretion_closed_form(degenerate, kGali.beta, 0.0, 1.0) == -0.5);
}

TEST_CASE("simulated welfare matches the brute-force oracle") {
    const ReducedForm rf = slope_kappa(kGali);
    for (double q : {1.0, 0.5, 1e-7}) {
        const PolicySolution sol = solve_quasi_commitment(kGali, q);
        const IrfPath path = impulse_response(sol, 200, 1.0);
        const double simulated = welfare_simulated(path, kGali.beta, rf.weight_x);
        const double oracle = brute_force_welfare(sol, 200, 1.0, kGali.beta, rf.weight_x);
        CHECK(approx_rel(simulated, oracle, 1e-10));
        CHECK(simulated < 0.0);
    }
    CHECK(approx_rel(
        welfare_simulated(impulse_response(solve_quasi_commitment(kGali, 1.0), 200, 1.0),
                          kGali.beta, rf.weight_x),
        -1.344027459626766, 1e-10));
}

TEST_CASE("welfare input contracts") {
    const ReducedForm rf = slope_kappa(kGali);
    const PolicySolution sol = solve_quasi_commitment(kGali, 1.0);
    const IrfPath point = impulse_response(sol, 0, 1.0);
    CHECK_THROWS_AS(welfare_simulated(point, kGali.beta, rf.weight_x), std::domain_error);

    const IrfPath perturbed = impulse_response(sol, 200, 1.0, 1.1);
    CHECK_THROWS_AS(welfare_simulated(perturbed, kGali.beta, rf.weight_x),
                    std::invalid_argument);
}

TEST_CASE("welfare table reproduces the headline row") {
    const std::vector<double> eps = {6.0};
    const std::vector<double> qs = {1.0, 0.8, 0.5, 0.1, 1e-7, 0.0};
    const WelfareTable table = welfare_table(kGali, eps, qs, 200);

    REQUIRE(table.rows.size() == 1);
    const WelfareRow& row = table.rows[0];
    CHECK(approx_rel(row.kappa, 0.1275, 1e-9));
    CHECK(approx_rel(row.W_commit, -1.344027459626766, 1e-10));
    REQUIRE(row.entries.size() == qs.size());

    for (const WelfareCell& cell : row.entries) {
        REQUIRE(cell.ok);
        CHECK(cell.W < 0.0);
        if (cell.q == 1.0) CHECK(cell.w == 0.0);
        if (cell.q == 0.5) CHECK(approx_abs(cell.w, 0.074, 0.015));
        if (cell.q == 0.0) CHECK(approx_abs(cell.w, 0.89, 0.015));
    }
}

TEST_CASE("welfare table spans all tabulated elasticities") {
    const std::vector<double> eps = {3193.0, 6.0, 2.35, 1.001};
    const std::vector<double> qs = {1.0, 0.5, 0.0};
    const WelfareTable table = welfare_table(kGali, eps, qs, 200);
    REQUIRE(table.rows.size() == 4);

    // Reference ratios for w(0.5) and w(0) by row.
    const double expected_w05[] = {0.068, 0.074, 0.078, 0.078};
    const double expected_w0[] = {0.73, 0.89, 1.11, 1.41};
    for (std::size_t i = 0; i < 4; ++i) {
        const double tol = table.rows[i].epsilon == 1.001 ? 0.03 : 0.015;
        for (const WelfareCell& cell : table.rows[i].entries) {
            REQUIRE(cell.ok);
            if (cell.q == 0.5) CHECK(approx_abs(cell.w, expected_w05[i], tol));
            if (cell.q == 0.0) CHECK(approx_abs(cell.w, expected_w0[i], tol));
        }
    }
}

TEST_CASE("relative loss is invariant to the shock scale") {
    const std::vector<double> eps = {6.0};
    const std::vector<double> qs = {0.5, 0.0};
    std::vector<double> reference;
    for (double u0 : {0.5, 1.0, std::sqrt(2.0)}) {
        StructuralParams p = kGali;
        p.u0 = u0;
        const WelfareTable table = welfare_table(p, eps, qs, 200);
        std::vector<double> ratios;
        for (const WelfareCell& cell : table.rows[0].entries) ratios.push_back(cell.w);
        if (reference.empty()) {
            reference = ratios;
        } else {
            for (std::size_t i = 0; i < ratios.size(); ++i)
                CHECK(approx_abs(ratios[i], reference[i], 1e-9));
        }
    }
}

TEST_CASE("discretion is dominated by every positive credibility") {
    for (double eps : {3193.0, 6.0, 2.35, 1.001}) {
        StructuralParams p = kGali;
        p.epsilon = eps;
        const ReducedForm rf = slope_kappa(p);
        const double W0 = welfare_simulated(impulse_response(solve_discretion(p), 200, 1.0),
                                            p.beta, rf.weight_x);
        for (double q : {1e-7, 0.1, 0.5, 0.8, 1.0}) {
            const double Wq = welfare_simulated(
                impulse_response(solve_quasi_commitment(p, q), 200, 1.0), p.beta,
                rf.weight_x);
            CHECK(W0 < Wq);
        }
    }
}

TEST_CASE("per-cell failures do not abort the table") {
    const std::vector<double> eps = {6.0, 0.5};  // second row violates epsilon > 1
    const std::vector<double> qs = {1.0, 0.0};
    const WelfareTable table = welfare_table(kGali, eps, qs, 200);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0].entries[0].ok);
    CHECK(table.rows[0].entries[1].ok);
    for (const WelfareCell& cell : table.rows[1].entries) {
        CHECK(!cell.ok);
        CHECK(!cell.error.empty());
    }
}

TEST_CASE("welfare table input contracts") {
    const std::vector<double> empty;
    const std::vector<double> qs = {0.5};
    CHECK_THROWS_AS(welfare_table(kGali, empty, qs, 200), std::domain_error);

    const std::vector<double> eps = {6.0};
    const std::vector<double> bad_q = {1.5};
    CHECK_THROWS_AS(welfare_table(kGali, eps, bad_q, 200), std::domain_error);
    CHECK_THROWS_AS(welfare_table(kGali, eps, qs, 0), std::domain_error);
}
