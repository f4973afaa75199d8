#include "ramsey/calibration.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ramsey {

namespace {

void require(bool ok, const char* violated_bound) {
    if (!ok) throw std::domain_error(std::string("parameter out of range: ") + violated_bound);
}

// (sigma + (phi+alpha_L)/(1-alpha_L)) * (1-theta)(1-beta*theta)/theta
double slope_prefactor(const StructuralParams& p) {
    const double elasticity_term = p.sigma + (p.phi + p.alpha_L) / (1.0 - p.alpha_L);
    const double calvo_term = (1.0 - p.theta) * (1.0 - p.beta * p.theta) / p.theta;
    return elasticity_term * calvo_term;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

StructuralParams gali2015() { return StructuralParams{}; }

void validate_ignoring_epsilon(const StructuralParams& p) {
    require(p.beta > 0.0 && p.beta < 1.0, "0 < beta < 1");
    require(p.sigma > 0.0, "sigma > 0");
    require(p.phi > 0.0, "phi > 0");
    require(p.alpha_L > 0.0 && p.alpha_L < 1.0, "0 < alpha_L < 1");
    require(p.theta > 0.0 && p.theta < 1.0, "0 < theta < 1");
    require(p.rho > 0.0 && p.rho < 1.0, "0 < rho < 1");
}

void validate(const StructuralParams& p) {
    validate_ignoring_epsilon(p);
    require(p.epsilon > 1.0, "epsilon > 1");
}

ReducedForm slope_kappa(const StructuralParams& p) {
    validate(p);
    const double pref = slope_prefactor(p);
    const double share = (1.0 - p.alpha_L) / (1.0 - p.alpha_L + p.alpha_L * p.epsilon);

    ReducedForm rf;
    rf.epsilon = p.epsilon;
    rf.kappa = pref * share;
    rf.weight_x = rf.kappa / p.epsilon;
    rf.kappa_max = pref * (1.0 - p.alpha_L);
    rf.kappa_eps = rf.kappa * p.epsilon;
    rf.kappa_eps_sup = rf.kappa_max / p.alpha_L;
    return rf;
}

KappaEpsBounds kappa_eps_bounds(const StructuralParams& p) {
    validate_ignoring_epsilon(p);
    const double kappa_max = slope_prefactor(p) * (1.0 - p.alpha_L);
    return {kappa_max, kappa_max / p.alpha_L};
}

StructuralParams load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);

    StructuralParams p = gali2015();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') continue;

        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        const std::string key{trim(view.substr(0, eq))};
        const std::string value{trim(view.substr(eq + 1))};

        double parsed = 0.0;
        try {
            std::size_t used = 0;
            parsed = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": bad numeric value for " + key);
        }

        if (key == "beta")
            p.beta = parsed;
        else if (key == "sigma")
            p.sigma = parsed;
        else if (key == "phi")
            p.phi = parsed;
        else if (key == "alpha_L")
            p.alpha_L = parsed;
        else if (key == "theta")
            p.theta = parsed;
        else if (key == "epsilon")
            p.epsilon = parsed;
        else if (key == "rho")
            p.rho = parsed;
        else if (key == "u0")
            p.u0 = parsed;
        else
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": unknown key \"" + key + "\"");
    }
    validate(p);
    return p;
}

}  // namespace ramsey
