#include "radwave/thermo.hpp"

#include "radwave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace radwave::thermo {

namespace {

void require_state(ThermoState st) {
    if (!(st.v > 0.0) || !std::isfinite(st.v)) {
        throw DomainError("specific volume must be positive and finite, got v = " + std::to_string(st.v));
    }
    if (!(st.theta > 0.0) || !std::isfinite(st.theta)) {
        throw DomainError("temperature must be positive and finite, got theta = " + std::to_string(st.theta));
    }
}

void require_volume(EntropyState es) {
    if (!(es.v > 0.0) || !std::isfinite(es.v)) {
        throw DomainError("specific volume must be positive and finite, got v = " + std::to_string(es.v));
    }
    if (!std::isfinite(es.s)) {
        throw DomainError("entropy must be finite");
    }
}

// Bounds of the temperature search, in log space.
const double kLogThetaMin = std::log(1e-12);
const double kLogThetaMax = std::log(1e12);

}  // namespace

void GasParams::validate() const {
    auto positive = [](double x, const char* name) {
        if (!(x > 0.0) || !std::isfinite(x)) {
            throw DomainError(std::string(name) + " must be > 0");
        }
    };
    auto nonnegative = [](double x, const char* name) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
            throw DomainError(std::string(name) + " must be >= 0");
        }
    };
    positive(R, "R");
    positive(Cv, "Cv");
    nonnegative(a, "a");
    positive(mu, "mu");
    positive(kappa1, "kappa1");
    positive(kappa2, "kappa2");
    positive(b, "b");
    positive(d, "d");
    nonnegative(lambda_heat, "lambda");
    nonnegative(K, "K");
    nonnegative(A, "A");
    nonnegative(beta, "beta");
}

double pressure(const GasParams& gp, ThermoState st) {
    require_state(st);
    const double t = st.theta;
    return gp.R * t / st.v + gp.a * t * t * t * t / 3.0;
}

double internal_energy(const GasParams& gp, ThermoState st) {
    require_state(st);
    const double t = st.theta;
    return gp.Cv * t + gp.a * st.v * t * t * t * t;
}

double entropy(const GasParams& gp, ThermoState st) {
    require_state(st);
    const double t = st.theta;
    return gp.Cv * std::log(t) + 4.0 / 3.0 * gp.a * st.v * t * t * t + gp.R * std::log(st.v);
}

double p_theta(const GasParams& gp, ThermoState st) {
    return gp.R / st.v + 4.0 / 3.0 * gp.a * st.theta * st.theta * st.theta;
}

double e_theta(const GasParams& gp, ThermoState st) {
    return gp.Cv + 4.0 * gp.a * st.v * st.theta * st.theta * st.theta;
}

double s_theta(const GasParams& gp, ThermoState st) {
    return gp.Cv / st.theta + 4.0 * gp.a * st.v * st.theta * st.theta;
}

double s_v(const GasParams& gp, ThermoState st) {
    return 4.0 / 3.0 * gp.a * st.theta * st.theta * st.theta + gp.R / st.v;
}

double temperature_from_entropy(const GasParams& gp, EntropyState es, double tol) {
    require_volume(es);
    if (!(tol > 0.0)) {
        throw DomainError("temperature_from_entropy: tol must be positive");
    }

    // f(y) = s(v, e^y) - s is increasing and convex in y = ln(theta).
    const double base = gp.R * std::log(es.v) - es.s;
    const double rad = 4.0 / 3.0 * gp.a * es.v;
    auto residual = [&](double y) { return gp.Cv * y + rad * std::exp(3.0 * y) + base; };
    auto slope = [&](double y) { return gp.Cv + 3.0 * rad * std::exp(3.0 * y); };

    // Geometric bracket expansion from theta = 1.
    double lo = 0.0;
    double hi = 0.0;
    const double f0 = residual(0.0);
    if (f0 == 0.0) {
        return 1.0;
    }
    double step = 1.0;
    if (f0 < 0.0) {
        hi = step;
        while (residual(hi) < 0.0) {
            lo = hi;
            step *= 2.0;
            hi = std::min(hi + step, kLogThetaMax);
            if (hi == kLogThetaMax && residual(hi) < 0.0) {
                throw ConvergenceError("temperature_from_entropy: temperature exceeds 1e12 for s = " +
                                       std::to_string(es.s));
            }
        }
    } else {
        lo = -step;
        while (residual(lo) > 0.0) {
            hi = lo;
            step *= 2.0;
            lo = std::max(lo - step, kLogThetaMin);
            if (lo == kLogThetaMin && residual(lo) > 0.0) {
                throw ConvergenceError("temperature_from_entropy: temperature below 1e-12 for s = " +
                                       std::to_string(es.s));
            }
        }
    }

    // Safeguarded Newton, started from the upper end where convexity makes
    // the iterates decrease monotonically.
    double y = hi;
    double prev_step = hi - lo;
    double step_taken = prev_step;
    for (int it = 0; it < 200; ++it) {
        const double fy = residual(y);
        if (fy == 0.0) {
            break;
        }
        if (fy < 0.0) {
            lo = y;
        } else {
            hi = y;
        }
        const double dfy = slope(y);
        double next = y - fy / dfy;
        if (!(next >= lo && next <= hi) || std::abs(2.0 * fy) > std::abs(prev_step * dfy)) {
            next = 0.5 * (lo + hi);
        }
        prev_step = step_taken;
        step_taken = next - y;
        y = next;
        if (std::abs(step_taken) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(y)) ||
            hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(y))) {
            break;
        }
    }

    const double scale = std::max({1.0, std::abs(es.s), std::abs(gp.Cv * y), std::abs(base)});
    if (std::abs(residual(y)) > tol * scale) {
        throw ConvergenceError("temperature_from_entropy: residual above tolerance for s = " + std::to_string(es.s));
    }
    return std::exp(y);
}

double p_tilde(const GasParams& gp, EntropyState es) {
    return pressure(gp, {es.v, temperature_from_entropy(gp, es)});
}

double p_tilde_v_at(const GasParams& gp, ThermoState st) {
    const double p_v = -gp.R * st.theta / (st.v * st.v);
    return p_v - p_theta(gp, st) * s_v(gp, st) / s_theta(gp, st);
}

double p_tilde_v(const GasParams& gp, EntropyState es) {
    return p_tilde_v_at(gp, {es.v, temperature_from_entropy(gp, es)});
}

double p_tilde_s(const GasParams& gp, EntropyState es) {
    const ThermoState st{es.v, temperature_from_entropy(gp, es)};
    return p_theta(gp, st) / s_theta(gp, st);
}

HessianReport p_tilde_hessian_at(const GasParams& gp, ThermoState st) {
    require_state(st);
    const double R = gp.R;
    const double Cv = gp.Cv;
    const double a = gp.a;
    const double v = st.v;
    const double t = st.theta;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double t4 = t2 * t2;
    const double t7 = t4 * t3;
    const double t10 = t7 * t3;
    const double a2 = a * a;
    const double a3 = a2 * a;
    const double a4 = a2 * a2;
    const double R2 = R * R;
    const double R3 = R2 * R;
    const double Cv2 = Cv * Cv;
    const double Cv3 = Cv2 * Cv;

    const double sth = s_theta(gp, st);
    const double theta_s = 1.0 / sth;

    HessianReport h{};
    h.p_vv = (1.0 / (sth * sth * sth)) *
             ((Cv * R3 + 3.0 * Cv2 * R2 + 2.0 * Cv3 * R) / (v * v * v * t2) +
              (40.0 * a * Cv * R2 + 28.0 * a * Cv2 * R - 8.0 * a * R3) * t / (v * v) +
              (496.0 * a2 * Cv * R + 192.0 * a2 * R2) * t4 / (3.0 * v) +
              (640.0 * a3 * Cv + 7488.0 * a3 * R) * t7 / 27.0 + 1792.0 * a4 * v * t10 / 27.0);

    h.p_ss = (theta_s * theta_s / sth) *
             (Cv * R / (v * t2) + (16.0 * a * Cv / 3.0 - 8.0 * a * R) * t + 16.0 * a2 * v * t4 / 3.0);

    h.det = (theta_s * theta_s / (sth * sth)) *
            ((Cv * R3 + Cv2 * R2) / (t2 * v * v * v * v) +
             (32.0 * a * Cv2 * R - 52.0 * a * Cv * R2 - 24.0 * a * R3) * t / (3.0 * v * v * v) +
             (448.0 * a2 * Cv * R - 1200.0 * a2 * R2) * t4 / (9.0 * v * v) - 320.0 * a3 * R * t7 / (9.0 * v) -
             256.0 * a4 * t10 / 9.0);

    // p~_vs: differentiate F(v, theta) = p_v - p_theta s_v / s_theta in theta,
    // then divide by s_theta (d theta / d s at fixed v).
    const double pth = p_theta(gp, st);
    const double sv = s_v(gp, st);
    const double p_vth = -R / (v * v);
    const double p_thth = 4.0 * a * t2;
    const double s_vth = 4.0 * a * t2;
    const double s_thth = -Cv / t2 + 8.0 * a * v * t;
    const double F_th = p_vth - ((p_thth * sv + pth * s_vth) * sth - pth * sv * s_thth) / (sth * sth);
    h.p_vs = F_th / sth;

    h.convex = h.p_vv > 0.0 && h.p_ss > 0.0 && h.det >= 0.0;
    return h;
}

HessianReport p_tilde_hessian(const GasParams& gp, EntropyState es) {
    return p_tilde_hessian_at(gp, {es.v, temperature_from_entropy(gp, es)});
}

double char_speed_at(const GasParams& gp, Family family, ThermoState st) {
    const double pv = p_tilde_v_at(gp, st);
    if (!(pv < 0.0)) {
        throw InternalError("char_speed: p~_v is not negative");
    }
    const double c = std::sqrt(-pv);
    return family == Family::One ? -c : c;
}

double char_speed(const GasParams& gp, Family family, EntropyState es) {
    return char_speed_at(gp, family, {es.v, temperature_from_entropy(gp, es)});
}

double reaction_rate(const GasParams& gp, double theta) {
    if (!(theta > 0.0)) {
        throw DomainError("reaction_rate: temperature must be positive");
    }
    if (gp.K == 0.0) {
        return 0.0;
    }
    return gp.K * std::pow(theta, gp.beta) * std::exp(-gp.A / theta);
}

double conductivity(const GasParams& gp, ThermoState st) {
    require_state(st);
    return gp.kappa1 + gp.kappa2 * st.v * std::pow(st.theta, gp.b);
}

bool convex_on_box(const GasParams& gp, const ConvexityBox& box) {
    const int n = std::max(box.n, 2);
    for (int i = 0; i < n; ++i) {
        const double v = box.v_lo + (box.v_hi - box.v_lo) * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double t = box.theta_lo + (box.theta_hi - box.theta_lo) * j / (n - 1);
            if (!p_tilde_hessian_at(gp, {v, t}).convex) {
                return false;
            }
        }
    }
    return true;
}

std::optional<double> convexity_threshold(GasParams gp, const ConvexityBox& box, double a_max, double rel_tol) {
    gp.a = 0.0;
    if (!convex_on_box(gp, box)) {
        return std::nullopt;
    }
    gp.a = a_max;
    if (convex_on_box(gp, box)) {
        return a_max;
    }
    double lo = 0.0;
    double hi = a_max;
    while (hi - lo > rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        gp.a = mid;
        if (convex_on_box(gp, box)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace radwave::thermo
