#pragma once

#include <string>

namespace ramsey {

// Deep parameters of the sticky-price economy plus the cost-push shock
// process. Quarterly calibration.
struct StructuralParams {
    double beta = 0.99;          // household discount factor, 0 < beta < 1
    double sigma = 1.0;          // inverse intertemporal elasticity, > 0
    double phi = 1.0;            // inverse Frisch elasticity, > 0
    double alpha_L = 1.0 / 3.0;  // labor share curvature, 0 < alpha_L < 1
    double theta = 2.0 / 3.0;    // Calvo price-stickiness probability, 0 < theta < 1
    double epsilon = 6.0;        // elasticity of substitution between goods, > 1
    double rho = 0.8;            // cost-push autocorrelation, 0 < rho < 1
    double u0 = 1.0;             // initial cost-push shock level
};

// Textbook quarterly calibration used as the default throughout.
StructuralParams gali2015();

// Throw std::domain_error naming the violated bound.
void validate(const StructuralParams& p);
// Same checks except the epsilon > 1 bound.
void validate_ignoring_epsilon(const StructuralParams& p);

// Reduced-form objects derived from the structural parameters:
//
//   kappa = (sigma + (phi+alpha_L)/(1-alpha_L))
//           * (1-theta)(1-beta*theta)/theta
//           * (1-alpha_L)/(1-alpha_L+alpha_L*epsilon)
//
// kappa is the Phillips-curve slope; the loss function weights the output
// gap by kappa/epsilon. kappa_max is the epsilon -> 1+ limit of kappa, and
// kappa*epsilon lies strictly between kappa_max and kappa_max/alpha_L.
struct ReducedForm {
    double epsilon;        // elasticity the form was evaluated at
    double kappa;          // Phillips slope
    double weight_x;       // kappa / epsilon, loss weight on the output gap
    double kappa_max;      // limit slope as epsilon -> 1+
    double kappa_eps;      // kappa * epsilon
    double kappa_eps_sup;  // kappa_max / alpha_L, supremum of kappa*epsilon
};

ReducedForm slope_kappa(const StructuralParams& p);

// (kappa_max, kappa_max/alpha_L): for any epsilon > 1, kappa(epsilon)*epsilon
// lies strictly between the two. Ignores p.epsilon.
struct KappaEpsBounds {
    double lower;
    double upper;
};
KappaEpsBounds kappa_eps_bounds(const StructuralParams& p);

// Flat key=value config with the seven structural parameters plus u0.
// Missing keys keep their gali2015 defaults; unknown keys are rejected.
StructuralParams load_config(const std::string& path);

}  // namespace ramsey
