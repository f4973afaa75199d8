#pragma once

#include <cmath>

// |actual - expected| <= rel_tol * |expected|
inline bool approx_rel(double actual, double expected, double rel_tol) {
    return std::abs(actual - expected) <= rel_tol * std::abs(expected);
}

inline bool approx_abs(double actual, double expected, double abs_tol) {
    return std::abs(actual - expected) <= abs_tol;
}
