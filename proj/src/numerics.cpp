#include "radwave/numerics.hpp"

#include "radwave/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace radwave::numerics {

namespace {

constexpr int kRuleSize = 10;

struct LegendreRule {
    std::array<double, kRuleSize> nodes{};
    std::array<double, kRuleSize> weights{};
};

// Nodes and weights on [-1, 1] via Newton iteration on P_n.
LegendreRule make_rule() {
    LegendreRule rule;
    constexpr int n = kRuleSize;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const LegendreRule& rule() {
    static const LegendreRule r = make_rule();
    return r;
}

double panel(const ScalarFn& f, double a, double b) {
    const auto& r = rule();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (int i = 0; i < kRuleSize; ++i) {
        sum += r.weights[i] * f(mid + half * r.nodes[i]);
    }
    return sum * half;
}

double refine(const ScalarFn& f, double a, double b, double whole, double tol, int depth, int max_depth) {
    const double mid = 0.5 * (a + b);
    const double left = panel(f, a, mid);
    const double right = panel(f, mid, b);
    const double both = left + right;
    if (std::abs(both - whole) <= tol || mid == a || mid == b) {
        return both;
    }
    if (depth >= max_depth) {
        throw ConvergenceError("adaptive quadrature did not converge on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]");
    }
    return refine(f, a, mid, left, 0.5 * tol, depth + 1, max_depth) +
           refine(f, mid, b, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double solve_increasing(const ScalarFnWithSlope& f, double lo, double hi, double guess, const RootOptions& opts) {
    if (!(lo <= hi)) {
        throw ConvergenceError("solve_increasing: empty bracket");
    }
    const ValueSlope flo = f(lo);
    if (flo.value == 0.0) {
        return lo;
    }
    const ValueSlope fhi = f(hi);
    if (fhi.value == 0.0) {
        return hi;
    }
    if (flo.value > 0.0 || fhi.value < 0.0) {
        throw ConvergenceError("solve_increasing: root not bracketed");
    }

    double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
    double step = hi - lo;
    double prev_step = step;
    for (int it = 0; it < opts.max_iter; ++it) {
        const ValueSlope fx = f(x);
        if (fx.value == 0.0) {
            return x;
        }
        if (fx.value < 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        const double x_tol = std::max(opts.x_tol, 2.0 * std::numeric_limits<double>::epsilon() * std::abs(x));
        if (hi - lo <= x_tol) {
            return x;
        }

        double next = x - fx.value / fx.slope;
        // Bisect when Newton leaves the bracket or is not converging fast enough.
        if (!(next > lo && next < hi) || std::abs(2.0 * fx.value) > std::abs(prev_step * fx.slope)) {
            next = 0.5 * (lo + hi);
        }
        prev_step = step;
        step = next - x;
        x = next;
        if (std::abs(step) <= x_tol) {
            return x;
        }
    }
    throw ConvergenceError("solve_increasing: iteration limit reached");
}

double bisect_increasing(const ScalarFn& f, double lo, double hi, double x_tol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo > 0.0 || fhi < 0.0) {
        throw ConvergenceError("bisect_increasing: root not bracketed");
    }
    for (int it = 0; it < max_iter && hi - lo > x_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) {
            break;
        }
        if (f(mid) <= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double integrate(const ScalarFn& f, double a, double b, double abs_tol, int max_depth) {
    if (a == b) {
        return 0.0;
    }
    if (b < a) {
        return -integrate(f, b, a, abs_tol, max_depth);
    }
    const double whole = panel(f, a, b);
    return refine(f, a, b, whole, abs_tol, 0, max_depth);
}

}  // namespace radwave::numerics
