#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "branchtree/error.hpp"

namespace branchtree {

// Static branch-prediction cost pair: c0 cycles for a mispredicted edge,
// c1 for a predicted one. Normalized so c0 >= c1 > 0.
struct StaticCosts {
    double c0;
    double c1;

    StaticCosts(double a, double b) {
        if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
            fail(ErrorCode::NonPositiveCost, "branch costs must be positive and finite");
        }
        c0 = a >= b ? a : b;
        c1 = a >= b ? b : a;
    }
};

// One way of splitting an interval [i,j] at s. cost(p', p'', i, j, s)
// returns the expected cycles this decision contributes per query, where
// p' = p(i,s-1) is the mass going left and p'' = p(s,j) the mass going right.
struct SplitMethod {
    int id = 1;
    std::function<double(double, double, int, int, int)> cost;
    std::string label;
};

}  // namespace branchtree
