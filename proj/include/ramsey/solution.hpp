#pragma once

#include <optional>

namespace ramsey {

enum class Regime {
    QuasiCommitment,  // commitment kept each period with probability q in (0,1]
    Discretion        // certain reoptimization every period (q = 0)
};

// 2x2 real matrix, row-major. Closed-loop matrices here are upper
// triangular, so the spectrum is {m00, m11}.
struct Mat2 {
    double m00, m01;
    double m10, m11;
};

// Solved policy for one regime. The rule is x_t = f_pi*pi_t + f_u*u_t and
// the closed loop acts on (pi_t, u_t). Under quasi-commitment lambda is the
// stable inflation eigenvalue in (0,1); under discretion it exceeds 1/beta
// and the costate coefficients are absent.
struct PolicySolution {
    Regime regime;
    double q;        // probability of not reneging; 0 under discretion
    double lambda;   // inflation eigenvalue
    double f_pi;
    double f_u;
    std::optional<double> p_pi;  // costate response to inflation
    std::optional<double> p_u;   // costate response to the shock
    double anchor_pi;            // pi_0 / u_0
    double anchor_x;             // x_0 / u_0 = -epsilon * anchor_pi
    Mat2 closed_loop;
};

}  // namespace ramsey
