#pragma once

#include <functional>
#include <limits>
#include <utility>

namespace radwave::numerics {

// Value and first derivative of a scalar function.
struct ValueSlope {
    double value;
    double slope;
};

using ScalarFn = std::function<double(double)>;
using ScalarFnWithSlope = std::function<ValueSlope(double)>;

struct RootOptions {
    // Absolute width of the bracket at which iteration stops.
    double x_tol = 0.0;
    int max_iter = 200;
};

// Root of a strictly increasing function on [lo, hi] with f(lo) <= 0 <= f(hi).
// Newton steps are taken from `guess` and replaced by bisection whenever they
// leave the current bracket or fail to halve it. Iterates to machine precision
// unless opts.x_tol is wider. Throws ConvergenceError if the bracket is invalid.
double solve_increasing(const ScalarFnWithSlope& f, double lo, double hi, double guess,
                        const RootOptions& opts = {});

// Plain bisection on an increasing function; used where no slope is available.
double bisect_increasing(const ScalarFn& f, double lo, double hi, double x_tol, int max_iter = 400);

// Adaptive composite Gauss-Legendre quadrature. Each panel is compared with
// its two halves; panels whose estimates disagree by more than their share of
// abs_tol are split. Throws ConvergenceError past max_depth levels.
double integrate(const ScalarFn& f, double a, double b, double abs_tol = 1e-10, int max_depth = 40);

}  // namespace radwave::numerics
