#include <doctest.h>

#include <stdexcept>

#include "ramsey/calibration.hpp"
#include "test_helpers.hpp"

using namespace ramsey;

TEST_CASE("slope matches the textbook calibration") {
    const ReducedForm rf = slope_kappa(gali2015());
    CHECK(approx_rel(rf.kappa, 0.1275, 1e-12));
    CHECK(approx_rel(rf.weight_x, 0.02125, 1e-12));
    CHECK(approx_rel(rf.kappa_max, 0.34, 1e-12));
    CHECK(approx_rel(rf.kappa_eps, 0.765, 1e-12));
    CHECK(approx_rel(rf.kappa_eps_sup, 1.02, 1e-12));
}

TEST_CASE("slope at the remaining tabulated elasticities") {
    StructuralParams p = gali2015();

    p.epsilon = 2.35;
    ReducedForm rf = slope_kappa(p);
    CHECK(approx_rel(rf.kappa, 0.23448275862068976, 1e-12));
    // The printed 0.235 is the value at three displayed digits.
    CHECK(approx_abs(rf.kappa, 0.235, 1e-3));
    CHECK(approx_abs(rf.weight_x, 0.1, 1e-3));

    p.epsilon = 1.001;
    rf = slope_kappa(p);
    CHECK(approx_rel(rf.kappa, 0.33988670443185626, 1e-12));
    CHECK(approx_abs(rf.kappa, rf.kappa_max, 1e-3));  // epsilon -> 1+ limit

    p.epsilon = 3193.0;
    rf = slope_kappa(p);
    CHECK(approx_rel(rf.weight_x, 1e-7, 5e-4));
    CHECK(approx_rel(rf.kappa, 0.00031924882629108, 1e-12));
}

TEST_CASE("kappa eps bounds bracket the product for any elasticity") {
    StructuralParams p = gali2015();
    const KappaEpsBounds bounds = kappa_eps_bounds(p);
    CHECK(approx_rel(bounds.lower, 0.34, 1e-12));
    CHECK(approx_rel(bounds.upper, 1.02, 1e-12));

    for (double eps : {1.001, 2.0, 6.0, 50.0, 3193.0}) {
        p.epsilon = eps;
        const ReducedForm rf = slope_kappa(p);
        CHECK(rf.kappa_eps > bounds.lower);
        CHECK(rf.kappa_eps < bounds.upper);
    }

    // kappa*eps = 0.765 at the default calibration sits inside the pair.
    p.epsilon = 6.0;
    CHECK(approx_rel(slope_kappa(p).kappa_eps, 0.765, 1e-12));

    p.alpha_L = 0.99;  // upper bound stays finite as alpha_L -> 1-
    const KappaEpsBounds tight = kappa_eps_bounds(p);
    CHECK(std::isfinite(tight.upper));
    CHECK(tight.upper > tight.lower);
}

TEST_CASE("slope is decreasing and its product with epsilon increasing") {
    StructuralParams p = gali2015();
    double prev_kappa = 1e300;
    double prev_product = 0.0;
    for (double eps : {1.001, 2.0, 6.0, 50.0, 3193.0}) {
        p.epsilon = eps;
        const ReducedForm rf = slope_kappa(p);
        CHECK(rf.kappa < prev_kappa);
        CHECK(rf.kappa_eps > prev_product);
        CHECK(rf.weight_x < rf.kappa);
        CHECK(rf.kappa < rf.kappa_max);
        CHECK(rf.weight_x > 0.0);
        prev_kappa = rf.kappa;
        prev_product = rf.kappa_eps;
    }
}

TEST_CASE("boundary parameter values are rejected") {
    const auto expect_domain_error = [](StructuralParams p) {
        CHECK_THROWS_AS(slope_kappa(p), std::domain_error);
    };

    StructuralParams p = gali2015();
    p.beta = 1.0;
    expect_domain_error(p);

    p = gali2015();
    p.theta = 0.0;
    expect_domain_error(p);

    p = gali2015();
    p.epsilon = 1.0;
    expect_domain_error(p);

    p = gali2015();
    p.alpha_L = 1.0;
    expect_domain_error(p);

    p = gali2015();
    p.sigma = 0.0;
    expect_domain_error(p);

    p = gali2015();
    p.rho = 1.0;
    expect_domain_error(p);

    // The message names the violated bound.
    p = gali2015();
    p.epsilon = 0.5;
    try {
        slope_kappa(p);
        FAIL("expected a domain error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("epsilon > 1") != std::string::npos);
    }
}
