#include "radwave/diagnostics.hpp"

#include "radwave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace radwave::diagnostics {

namespace {

void require_match(const FieldSnapshot& snap, std::size_t n) {
    if (snap.v.size() != n || snap.u.size() != n || snap.theta.size() != n || snap.z.size() != n) {
        throw DomainError("snapshot and profile sizes differ");
    }
    if (n < 2) {
        throw DomainError("diagnostics need at least two columns");
    }
}

// Trapezoidal rule over arbitrary columns.
template <class F>
double trapezoid(std::span<const double> x, F&& f) {
    double sum = 0.0;
    double prev = f(0);
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double cur = f(i);
        sum += 0.5 * (prev + cur) * (x[i] - x[i - 1]);
        prev = cur;
    }
    return sum;
}

// Central differences inside, one-sided at the ends.
std::vector<double> derivative(std::span<const double> x, const std::vector<double>& f) {
    const std::size_t n = f.size();
    std::vector<double> d(n);
    d[0] = (f[1] - f[0]) / (x[1] - x[0]);
    d[n - 1] = (f[n - 1] - f[n - 2]) / (x[n - 1] - x[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        d[i] = (f[i + 1] - f[i - 1]) / (x[i + 1] - x[i - 1]);
    }
    return d;
}

std::vector<double> difference(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        d[i] = a[i] - b[i];
    }
    return d;
}

}  // namespace

double phi_bregman(double x) {
    if (!(x > 0.0)) {
        throw DomainError("phi_bregman: argument must be positive");
    }
    return x - std::log(x) - 1.0;
}

double relative_entropy_density(const GasParams& gp, const WaveState& cell, const WaveState& wave) {
    if (!(cell.v > 0.0) || !(cell.theta > 0.0) || !(wave.v > 0.0) || !(wave.theta > 0.0)) {
        throw DomainError("relative_entropy_density: volumes and temperatures must be positive");
    }
    const double th = cell.theta;
    const double Th = wave.theta;
    const double du = cell.u - wave.u;
    const double dth = th - Th;
    return gp.Cv * Th * phi_bregman(th / Th) + gp.R * Th * phi_bregman(cell.v / wave.v) + 0.5 * du * du +
           gp.a * cell.v * dth * dth / 3.0 * (3.0 * th * th + 2.0 * th * Th + Th * Th);
}

double total_relative_entropy(const GasParams& gp, const FieldSnapshot& snap, const WaveProfile& profile) {
    require_match(snap, profile.x.size());
    return trapezoid(profile.x, [&](std::size_t i) {
        return relative_entropy_density(gp, {snap.v[i], snap.u[i], snap.theta[i]},
                                        {profile.V[i], profile.U[i], profile.Theta[i]});
    });
}

double dissipation_rate(const GasParams& gp, const FieldSnapshot& snap, const WaveProfile& profile) {
    require_match(snap, profile.x.size());
    const auto du_x = derivative(profile.x, difference(snap.u, profile.U));
    const auto dth_x = derivative(profile.x, difference(snap.theta, profile.Theta));
    return trapezoid(profile.x, [&](std::size_t i) {
        const double v = snap.v[i];
        const double th = snap.theta[i];
        const double Th = profile.Theta[i];
        const double kappa = thermo::conductivity(gp, {v, th});
        return gp.mu * Th * du_x[i] * du_x[i] / (v * th) + kappa * Th * dth_x[i] * dth_x[i] / (v * th * th);
    });
}

double h1_perturbation(const FieldSnapshot& snap, const WaveProfile& profile) {
    require_match(snap, profile.x.size());
    const auto dv = difference(snap.v, profile.V);
    const auto du = difference(snap.u, profile.U);
    const auto dth = difference(snap.theta, profile.Theta);
    const auto dv_x = derivative(profile.x, dv);
    const auto du_x = derivative(profile.x, du);
    const auto dth_x = derivative(profile.x, dth);
    const double sq = trapezoid(profile.x, [&](std::size_t i) {
        return dv[i] * dv[i] + du[i] * du[i] + dth[i] * dth[i] + dv_x[i] * dv_x[i] + du_x[i] * du_x[i] +
               dth_x[i] * dth_x[i];
    });
    return std::sqrt(sq);
}

FanDistance sup_distance_to_fan(const GasParams& gp, const FieldSnapshot& snap, std::span<const double> x,
                                const waves::RiemannFan& fan) {
    require_match(snap, x.size());
    const auto& rd = fan.data();
    const double t = snap.t;
    if (!(t >= 0.0)) {
        throw DomainError("sup_distance_to_fan: negative time");
    }
    const waves::WaveState left = fan.eval(-std::numeric_limits<double>::infinity());
    const waves::WaveState right = fan.eval(std::numeric_limits<double>::infinity());
    FanDistance d;
    for (std::size_t i = 0; i < x.size(); ++i) {
        waves::WaveState ref{};
        if (t > 0.0) {
            ref = fan.eval(x[i] / t);
        } else if (x[i] < 0.0) {
            ref = left;
        } else if (x[i] > 0.0) {
            ref = right;
        } else {
            ref = fan.eval(0.0);
        }
        d.sup_v = std::max(d.sup_v, std::abs(snap.v[i] - ref.v));
        d.sup_u = std::max(d.sup_u, std::abs(snap.u[i] - ref.u));
        d.sup_s = std::max(d.sup_s, std::abs(thermo::entropy(gp, {snap.v[i], snap.theta[i]}) - rd.s_bar));
        d.sup_z = std::max(d.sup_z, std::abs(snap.z[i]));
    }
    return d;
}

BoundsReport bounds_report(const FieldSnapshot& snap, std::span<const double> x) {
    require_match(snap, x.size());
    BoundsReport b;
    const auto [vmin, vmax] = std::minmax_element(snap.v.begin(), snap.v.end());
    const auto [tmin, tmax] = std::minmax_element(snap.theta.begin(), snap.theta.end());
    const auto [zmin, zmax] = std::minmax_element(snap.z.begin(), snap.z.end());
    b.min_v = *vmin;
    b.max_v = *vmax;
    b.min_theta = *tmin;
    b.max_theta = *tmax;
    b.min_z = *zmin;
    b.max_z = *zmax;
    b.reactant_mass = trapezoid(x, [&](std::size_t i) { return snap.z[i]; });
    return b;
}

DiagnosticsRecord make_record(const GasParams& gp, const FieldSnapshot& snap, const WaveProfile& profile,
                              const waves::RiemannFan& fan) {
    DiagnosticsRecord r;
    r.t = snap.t;
    const auto fd = sup_distance_to_fan(gp, snap, profile.x, fan);
    r.sup_v = fd.sup_v;
    r.sup_u = fd.sup_u;
    r.sup_s = fd.sup_s;
    r.sup_z = fd.sup_z;
    r.eta_total = total_relative_entropy(gp, snap, profile);
    r.dissipation = dissipation_rate(gp, snap, profile);
    r.h1_perturbation = h1_perturbation(snap, profile);
    const auto b = bounds_report(snap, profile.x);
    r.min_v = b.min_v;
    r.max_v = b.max_v;
    r.min_theta = b.min_theta;
    r.max_theta = b.max_theta;
    r.min_z = b.min_z;
    r.max_z = b.max_z;
    r.reactant_mass = b.reactant_mass;
    return r;
}

DiagnosticsRecord make_record(const solver::SimulationState& state) {
    return make_record(state.gas(), state.snapshot(), state.profile(), state.wave().fan());
}

}  // namespace radwave::diagnostics
