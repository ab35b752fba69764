#pragma once

// Independent reference implementations used only by the tests.

#include "radwave/thermo.hpp"

#include <cmath>

namespace oracle {

using LD = long double;

// Ideal polytropic gas (a = 0), gamma = 1 + R / Cv.
struct IdealGas {
    double R = 1.0;
    double Cv = 1.5;

    double gamma() const { return 1.0 + R / Cv; }
    double theta(double v, double s) const { return std::exp((s - R * std::log(v)) / Cv); }
    double p(double v, double s) const { return R * theta(v, s) / v; }
    double p_v(double v, double s) const { return -gamma() * p(v, s) / v; }
    double p_vv(double v, double s) const { return gamma() * (gamma() + 1.0) * p(v, s) / (v * v); }
    double c(double v, double s) const { return std::sqrt(-p_v(v, s)); }
    // integral_{v0}^{v1} c(xi, s) dxi
    double c_integral(double v0, double v1, double s) const {
        const double k = c(1.0, s);
        const double e = (1.0 - gamma()) / 2.0;
        return k * (std::pow(v1, e) - std::pow(v0, e)) / e;
    }
    // v with c(v, s) = omega
    double v_of_speed(double omega, double s) const {
        return std::pow(omega / c(1.0, s), -2.0 / (gamma() + 1.0));
    }
};

// theta~(v, s) in extended precision: Newton in ln(theta) from the a = 0
// solution, which bounds the root from above.
inline LD theta_ld(const radwave::thermo::GasParams& g, LD v, LD s) {
    const LD Cv = g.Cv;
    const LD R = g.R;
    const LD a = g.a;
    LD y = (s - R * std::log(v)) / Cv;
    for (int i = 0; i < 200; ++i) {
        const LD e3 = std::exp(3.0L * y);
        const LD f = Cv * y + 4.0L / 3.0L * a * v * e3 + R * std::log(v) - s;
        const LD df = Cv + 4.0L * a * v * e3;
        const LD next = y - f / df;
        if (next == y) {
            break;
        }
        y = next;
    }
    return std::exp(y);
}

inline LD p_tilde_ld(const radwave::thermo::GasParams& g, LD v, LD s) {
    const LD t = theta_ld(g, v, s);
    return static_cast<LD>(g.R) * t / v + static_cast<LD>(g.a) * t * t * t * t / 3.0L;
}

inline LD entropy_ld(const radwave::thermo::GasParams& g, LD v, LD t) {
    return static_cast<LD>(g.Cv) * std::log(t) + 4.0L / 3.0L * static_cast<LD>(g.a) * v * t * t * t +
           static_cast<LD>(g.R) * std::log(v);
}

struct FdHessian {
    double p_vv;
    double p_vs;
    double p_ss;
    double det;
};

// Central second differences of p~ with step h, evaluated in extended precision.
inline FdHessian fd_hessian(const radwave::thermo::GasParams& g, double v_in, double theta_in, double h_in = 1e-5) {
    const LD v = v_in;
    const LD s = entropy_ld(g, v, theta_in);
    const LD h = h_in;
    auto P = [&](LD vv, LD ss) { return p_tilde_ld(g, vv, ss); };
    const LD p0 = P(v, s);
    const LD pvv = (P(v + h, s) - 2.0L * p0 + P(v - h, s)) / (h * h);
    const LD pss = (P(v, s + h) - 2.0L * p0 + P(v, s - h)) / (h * h);
    const LD pvs = (P(v + h, s + h) - P(v + h, s - h) - P(v - h, s + h) + P(v - h, s - h)) / (4.0L * h * h);
    return {static_cast<double>(pvv), static_cast<double>(pvs), static_cast<double>(pss),
            static_cast<double>(pvv * pss - pvs * pvs)};
}

inline bool fd_convex(const radwave::thermo::GasParams& g, double v, double theta) {
    const auto h = fd_hessian(g, v, theta);
    return h.p_vv > 0.0 && h.p_ss > 0.0 && h.det >= 0.0;
}

// Spatially uniform reactor at fixed v: theta' = lambda phi z / e_theta, z' = -phi z.
// Classical RK4 with a fixed step count.
struct ReactorState {
    double theta;
    double z;
};

inline ReactorState reactor_rk4(const radwave::thermo::GasParams& g, double v, ReactorState y0, double t_end,
                                int steps = 20000) {
    auto phi = [&](double th) { return g.K * std::pow(th, g.beta) * std::exp(-g.A / th); };
    auto f = [&](ReactorState y) {
        const double r = phi(y.theta) * y.z;
        const double e_th = g.Cv + 4.0 * g.a * v * y.theta * y.theta * y.theta;
        return ReactorState{g.lambda_heat * r / e_th, -r};
    };
    const double h = t_end / steps;
    ReactorState y = y0;
    for (int i = 0; i < steps; ++i) {
        const auto k1 = f(y);
        const auto k2 = f({y.theta + 0.5 * h * k1.theta, y.z + 0.5 * h * k1.z});
        const auto k3 = f({y.theta + 0.5 * h * k2.theta, y.z + 0.5 * h * k2.z});
        const auto k4 = f({y.theta + h * k3.theta, y.z + h * k3.z});
        y.theta += h / 6.0 * (k1.theta + 2.0 * k2.theta + 2.0 * k3.theta + k4.theta);
        y.z += h / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
    }
    return y;
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

}  // namespace oracle
