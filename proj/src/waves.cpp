#include "radwave/waves.hpp"

#include "radwave/errors.hpp"
#include "radwave/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace radwave::waves {

using thermo::ThermoState;

namespace {

const double kLogVMin = std::log(1e-8);
const double kLogVMax = std::log(1e8);

double theta_at(const GasParams& gp, double v, double s_bar) {
    return thermo::temperature_from_entropy(gp, {v, s_bar});
}

double sound_speed(const GasParams& gp, double v, double s_bar) {
    return std::sqrt(-thermo::p_tilde_v_at(gp, {v, theta_at(gp, v, s_bar)}));
}

// integral_0^z (1 + y^2)^-q dy
double tail_integral(double q, double z) {
    if (q == 2.0) {
        const double frac = std::abs(z) > 1.0 ? 1.0 / (z + 1.0 / z) : z / (1.0 + z * z);
        return 0.5 * (frac + std::atan(z));
    }
    // y = tan(tau) maps the integrand to cos^(2q-2)(tau) on a finite range.
    const double p = 2.0 * q - 2.0;
    return numerics::integrate([p](double tau) { return std::pow(std::cos(tau), p); }, 0.0, std::atan(z), 1e-14);
}

}  // namespace

// ---------------------------------------------------------------------------

RiemannData RiemannData::make(const GasParams& gp, WaveState left, WaveState right, double entropy_tol) {
    if (!std::isfinite(left.u) || !std::isfinite(right.u)) {
        throw DomainError("far-field velocities must be finite");
    }
    const double s_minus = thermo::entropy(gp, {left.v, left.theta});
    const double s_plus = thermo::entropy(gp, {right.v, right.theta});
    if (!(std::abs(s_minus - s_plus) <= entropy_tol)) {
        throw DomainError("far-field entropies differ by " + std::to_string(std::abs(s_minus - s_plus)) +
                          " (> entropy_tol); rarefaction data requires s+ = s- = s_bar");
    }
    RiemannData rd{};
    rd.v_minus = left.v;
    rd.u_minus = left.u;
    rd.theta_minus = left.theta;
    rd.v_plus = right.v;
    rd.u_plus = right.u;
    rd.theta_plus = right.theta;
    rd.s_bar = 0.5 * (s_minus + s_plus);
    rd.delta = std::abs(left.v - right.v) + std::abs(left.u - right.u);
    rd.mid = intermediate_state(gp, rd);
    return rd;
}

// ---------------------------------------------------------------------------

double burgers_normalization(double q) {
    if (!(q > 1.5)) {
        throw DomainError("Burgers tail exponent q must exceed 3/2");
    }
    if (q == 2.0) {
        return 4.0 / M_PI;
    }
    const double p = 2.0 * q - 2.0;
    const double total =
        numerics::integrate([p](double tau) { return std::pow(std::cos(tau), p); }, 0.0, 0.5 * M_PI, 1e-14);
    return 1.0 / total;
}

BurgersSpec BurgersSpec::make(double w_minus, double w_plus, double eps, double q) {
    if (!(w_minus <= w_plus)) {
        throw DomainError("Burgers data must satisfy w- <= w+");
    }
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw DomainError("Burgers smoothing eps must be positive");
    }
    return BurgersSpec{w_minus, w_plus, eps, q, burgers_normalization(q)};
}

double burgers_initial(const BurgersSpec& spec, double x) {
    const double mid = 0.5 * (spec.w_plus + spec.w_minus);
    const double half = 0.5 * (spec.w_plus - spec.w_minus);
    return mid + half * spec.Kq * tail_integral(spec.q, spec.eps * x);
}

double burgers_initial_slope(const BurgersSpec& spec, double x) {
    const double half = 0.5 * (spec.w_plus - spec.w_minus);
    const double z = spec.eps * x;
    return half * spec.Kq * spec.eps * std::pow(1.0 + z * z, -spec.q);
}

double burgers_eval(const BurgersSpec& spec, double t, double x, double tol, double* foot) {
    if (!(t >= 0.0)) {
        throw DomainError("burgers_eval: t must be nonnegative");
    }
    if (spec.w_minus == spec.w_plus) {
        return spec.w_minus;
    }
    if (t == 0.0) {
        if (foot) {
            *foot = x;
        }
        return burgers_initial(spec, x);
    }
    // Widened by a rounding margin so that nearly equal far speeds stay bracketed.
    const double margin =
        8.0 * std::numeric_limits<double>::epsilon() *
            (std::abs(x) + t * std::max(std::abs(spec.w_minus), std::abs(spec.w_plus))) +
        std::numeric_limits<double>::min();
    const double lo = x - t * spec.w_plus - margin;
    const double hi = x - t * spec.w_minus + margin;
    auto characteristic = [&](double x0) {
        return numerics::ValueSlope{x0 + t * burgers_initial(spec, x0) - x,
                                    1.0 + t * burgers_initial_slope(spec, x0)};
    };
    const double guess = foot ? *foot : std::numeric_limits<double>::quiet_NaN();
    double x0 = 0.0;
    try {
        x0 = numerics::solve_increasing(characteristic, lo, hi, guess, {tol * (1.0 + std::abs(x)), 200});
    } catch (const ConvergenceError& e) {
        throw InternalError(std::string("burgers_eval: ") + e.what());
    }
    if (foot) {
        *foot = x0;
    }
    return burgers_initial(spec, x0);
}

double burgers_fan(double w_minus, double w_plus, double xi) {
    return std::clamp(xi, w_minus, w_plus);
}

// ---------------------------------------------------------------------------

double sound_speed_integral(const GasParams& gp, double s_bar, double v_a, double v_b, double abs_tol) {
    if (!(v_a > 0.0) || !(v_b > 0.0)) {
        throw DomainError("sound_speed_integral: volumes must be positive");
    }
    if (v_a == v_b) {
        return 0.0;
    }
    // Integrate in eta = ln(v) so that wide volume ranges stay well resolved.
    auto integrand = [&](double eta) {
        const double v = std::exp(eta);
        return sound_speed(gp, v, s_bar) * v;
    };
    try {
        return numerics::integrate(integrand, std::log(v_a), std::log(v_b), abs_tol);
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(std::string("rarefaction curve quadrature: ") + e.what());
    }
}

double invert_char_speed(const GasParams& gp, Family family, double omega, double s_bar, double tol,
                         std::optional<VolumeBracket> bracket) {
    if (!std::isfinite(omega) || (family == Family::Three && !(omega > 0.0)) ||
        (family == Family::One && !(omega < 0.0))) {
        throw DomainError("invert_char_speed: omega outside the attainable range of the family");
    }
    const double sign = family == Family::One ? 1.0 : -1.0;

    // Increasing in eta = ln(v) for either family.
    auto speed_gap = [&](double eta) {
        const double v = std::exp(eta);
        const ThermoState st{v, theta_at(gp, v, s_bar)};
        const auto h = thermo::p_tilde_hessian_at(gp, st);
        const double c = std::sqrt(-thermo::p_tilde_v_at(gp, st));
        const double lambda = family == Family::One ? -c : c;
        return numerics::ValueSlope{sign * (lambda - omega), h.p_vv * v / (2.0 * c)};
    };

    double lo = 0.0;
    double hi = 0.0;
    if (bracket) {
        if (!(bracket->lo > 0.0) || !(bracket->hi >= bracket->lo)) {
            throw DomainError("invert_char_speed: invalid volume bracket");
        }
        lo = std::log(bracket->lo);
        hi = std::log(bracket->hi);
        const double slack = 1e-12 * std::max(1.0, std::abs(omega));
        const double g_lo = speed_gap(lo).value;
        if (g_lo >= 0.0) {
            if (g_lo <= slack) {
                return bracket->lo;
            }
            throw DomainError("invert_char_speed: omega outside the bracketed speed range");
        }
        const double g_hi = speed_gap(hi).value;
        if (g_hi <= 0.0) {
            if (g_hi >= -slack) {
                return bracket->hi;
            }
            throw DomainError("invert_char_speed: omega outside the bracketed speed range");
        }
    } else {
        double step = 1.0;
        if (speed_gap(0.0).value < 0.0) {
            lo = 0.0;
            hi = step;
            while (speed_gap(hi).value < 0.0) {
                if (hi >= kLogVMax) {
                    throw DomainError("invert_char_speed: omega not attained for v <= 1e8");
                }
                lo = hi;
                step *= 2.0;
                hi = std::min(hi + step, kLogVMax);
            }
        } else {
            hi = 0.0;
            lo = -step;
            while (speed_gap(lo).value > 0.0) {
                if (lo <= kLogVMin) {
                    throw DomainError("invert_char_speed: omega not attained for v >= 1e-8");
                }
                hi = lo;
                step *= 2.0;
                lo = std::max(lo - step, kLogVMin);
            }
        }
    }

    const double eta = numerics::solve_increasing(speed_gap, lo, hi, 0.5 * (lo + hi), {tol, 200});
    return std::exp(eta);
}

double rarefaction_curve_u(const GasParams& gp, Family family, double v0, double u0, double s_bar, double v) {
    const double integral = sound_speed_integral(gp, s_bar, v0, v);
    return family == Family::One ? u0 + integral : u0 - integral;
}

IntermediateState intermediate_state(const GasParams& gp, const RiemannData& rd, double tol) {
    const double s_bar = rd.s_bar;
    if (rd.v_minus == rd.v_plus && rd.u_minus == rd.u_plus) {
        return {rd.v_minus, rd.u_minus, theta_at(gp, rd.v_minus, s_bar)};
    }

    // g(v) = u- + int_{v-}^{v} c - int_{v}^{v+} c - u+, increasing with g' = 2 c(v).
    auto mismatch = [&](double v) {
        return rd.u_minus + sound_speed_integral(gp, s_bar, rd.v_minus, v) -
               sound_speed_integral(gp, s_bar, v, rd.v_plus) - rd.u_plus;
    };

    // Rarefaction admissibility forces v_m >= max(v-, v+).
    double lo = std::max(rd.v_minus, rd.v_plus);
    const double g_lo = mismatch(lo);
    constexpr double kSlack = 1e-9;
    if (g_lo > kSlack) {
        throw RarefactionConfigError(
            "far-field states are not joined by a 1-rarefaction and a 3-rarefaction "
            "(the wave curves meet below max(v-, v+); shocks would be required)");
    }

    double v_m = lo;
    if (g_lo < 0.0) {
        double hi = 2.0 * lo;
        constexpr double kBracketMax = 1e8;
        while (mismatch(hi) < 0.0) {
            if (hi >= kBracketMax) {
                throw RarefactionConfigError(
                    "no intermediate state with v_m < 1e8: the velocity jump opens a vacuum");
            }
            lo = hi;
            hi = std::min(2.0 * hi, kBracketMax);
        }
        auto g = [&](double v) { return numerics::ValueSlope{mismatch(v), 2.0 * sound_speed(gp, v, s_bar)}; };
        try {
            v_m = numerics::solve_increasing(g, lo, hi, 0.5 * (lo + hi), {tol * hi, 200});
        } catch (const ConvergenceError& e) {
            throw RarefactionConfigError(std::string("intermediate state: ") + e.what());
        }
    }

    const double u_m = rarefaction_curve_u(gp, Family::One, rd.v_minus, rd.u_minus, s_bar, v_m);
    if (u_m < rd.u_minus - kSlack || rd.u_plus < u_m - kSlack) {
        throw RarefactionConfigError("intermediate state violates rarefaction admissibility (u- <= u_m <= u+)");
    }
    return {v_m, u_m, theta_at(gp, v_m, s_bar)};
}

// ---------------------------------------------------------------------------

RiemannFan::RiemannFan(const GasParams& gp, const RiemannData& rd) : gp_(gp), rd_(rd) {
    const double s = rd.s_bar;
    l1_minus_ = thermo::char_speed(gp, Family::One, {rd.v_minus, s});
    l1_mid_ = thermo::char_speed(gp, Family::One, {rd.mid.v_m, s});
    l3_mid_ = thermo::char_speed(gp, Family::Three, {rd.mid.v_m, s});
    l3_plus_ = thermo::char_speed(gp, Family::Three, {rd.v_plus, s});
}

WaveState RiemannFan::eval(double xi) const {
    const double s = rd_.s_bar;
    const auto& m = rd_.mid;
    if (xi <= l1_minus_) {
        return {rd_.v_minus, rd_.u_minus, theta_at(gp_, rd_.v_minus, s)};
    }
    if (xi < l1_mid_) {
        const double V = invert_char_speed(gp_, Family::One, xi, s, 1e-14, VolumeBracket{rd_.v_minus, m.v_m});
        return {V, rarefaction_curve_u(gp_, Family::One, rd_.v_minus, rd_.u_minus, s, V), theta_at(gp_, V, s)};
    }
    if (xi <= l3_mid_) {
        return {m.v_m, m.u_m, m.theta_m};
    }
    if (xi < l3_plus_) {
        const double V = invert_char_speed(gp_, Family::Three, xi, s, 1e-14, VolumeBracket{rd_.v_plus, m.v_m});
        return {V, rarefaction_curve_u(gp_, Family::Three, m.v_m, m.u_m, s, V), theta_at(gp_, V, s)};
    }
    return {rd_.v_plus, rd_.u_plus, theta_at(gp_, rd_.v_plus, s)};
}

WaveState riemann_fan_eval(const GasParams& gp, const RiemannData& rd, double xi) {
    return RiemannFan(gp, rd).eval(xi);
}

// ---------------------------------------------------------------------------

SmoothWave::SmoothWave(const GasParams& gp, const RiemannData& rd, const WaveOptions& opts)
    : fan_(gp, rd), trivial_(rd.delta == 0.0) {
    if (trivial_) {
        return;
    }
    const double eps = opts.eps.value_or(rd.delta);
    b1_ = BurgersSpec::make(fan_.lambda1_minus(), fan_.lambda1_mid(), eps, opts.q);
    b3_ = BurgersSpec::make(fan_.lambda3_mid(), fan_.lambda3_plus(), eps, opts.q);
}

WaveState SmoothWave::eval(double t, double x, ColumnMemo* memo) const {
    if (!(t >= 0.0)) {
        throw DomainError("smooth wave: t must be nonnegative");
    }
    const auto& rd = fan_.data();
    const auto& gp = fan_.gas();
    if (trivial_) {
        return rd.left();
    }
    const double s = rd.s_bar;
    const auto& m = rd.mid;
    const double tau = t + 1.0;

    double V1 = m.v_m;
    double U1 = m.u_m;
    if (b1_.w_minus < b1_.w_plus) {
        const double w = burgers_eval(b1_, tau, x, 1e-12, memo ? &memo->foot1 : nullptr);
        V1 = invert_char_speed(gp, Family::One, w, s, 1e-14, VolumeBracket{rd.v_minus, m.v_m});
        U1 = rarefaction_curve_u(gp, Family::One, rd.v_minus, rd.u_minus, s, V1);
    }

    double V3 = m.v_m;
    double U3 = m.u_m;
    if (b3_.w_minus < b3_.w_plus) {
        const double w = burgers_eval(b3_, tau, x, 1e-12, memo ? &memo->foot3 : nullptr);
        V3 = invert_char_speed(gp, Family::Three, w, s, 1e-14, VolumeBracket{rd.v_plus, m.v_m});
        U3 = rarefaction_curve_u(gp, Family::Three, m.v_m, m.u_m, s, V3);
    }

    const double V = V1 + V3 - m.v_m;
    return {V, U1 + U3 - m.u_m, theta_at(gp, V, s)};
}

WaveState smooth_wave_eval(const GasParams& gp, const RiemannData& rd, const WaveOptions& opts, double t, double x) {
    return SmoothWave(gp, rd, opts).eval(t, x);
}

GridSampler::GridSampler(const SmoothWave& wave, std::vector<double> x)
    : wave_(&wave), x_(std::move(x)), memo_(x_.size()) {}

WaveProfile GridSampler::sample(double t) {
    WaveProfile p;
    p.t = t;
    p.x = x_;
    p.V.resize(x_.size());
    p.U.resize(x_.size());
    p.Theta.resize(x_.size());
    const auto& mid = wave_->data().mid;
    p.v_m = mid.v_m;
    p.u_m = mid.u_m;
    p.theta_m = mid.theta_m;
    for (std::size_t i = 0; i < x_.size(); ++i) {
        const WaveState w = wave_->eval(t, x_[i], &memo_[i]);
        p.V[i] = w.v;
        p.U[i] = w.u;
        p.Theta[i] = w.theta;
    }
    return p;
}

WaveProfile sample_fan(const RiemannFan& fan, double t, std::span<const double> x) {
    if (!(t > 0.0)) {
        throw DomainError("sample_fan: t must be positive");
    }
    WaveProfile p;
    p.t = t;
    p.x.assign(x.begin(), x.end());
    p.V.resize(x.size());
    p.U.resize(x.size());
    p.Theta.resize(x.size());
    const auto& mid = fan.data().mid;
    p.v_m = mid.v_m;
    p.u_m = mid.u_m;
    p.theta_m = mid.theta_m;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const WaveState w = fan.eval(x[i] / t);
        p.V[i] = w.v;
        p.U[i] = w.u;
        p.Theta[i] = w.theta;
    }
    return p;
}

}  // namespace radwave::waves
