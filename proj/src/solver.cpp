#include "radwave/solver.hpp"

#include "radwave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace radwave::solver {

namespace {

constexpr double kEdgeTol = 1e-8;

struct Fields {
    std::vector<double> v, u, theta, z;

    explicit Fields(std::size_t n) : v(n), u(n), theta(n), z(n) {}
};

// Cell-wise constitutive quantities reused by the stencil.
struct Work {
    std::vector<double> p, p_th, e_th, kappa, phi, vface;

    explicit Work(std::size_t n) : p(n), p_th(n), e_th(n), kappa(n), phi(n), vface(n) {}
};

void rhs(const GasParams& gp, double dx, const Fields& f, Work& w, Fields& out) {
    const std::size_t n = f.v.size();
    const double a = gp.a;
    const bool reactive = gp.K != 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = f.v[i];
        const double th = f.theta[i];
        const double th3 = th * th * th;
        w.p[i] = gp.R * th / v + a * th3 * th / 3.0;
        w.p_th[i] = gp.R / v + 4.0 / 3.0 * a * th3;
        w.e_th[i] = gp.Cv + 4.0 * a * v * th3;
        w.kappa[i] = gp.kappa1 + gp.kappa2 * v * std::pow(th, gp.b);
        w.phi[i] = reactive ? gp.K * std::pow(th, gp.beta) * std::exp(-gp.A / th) : 0.0;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        w.vface[i] = 0.5 * (f.v[i] + f.v[i + 1]);
    }

    const double inv2dx = 0.5 / dx;
    const double invdx2 = 1.0 / (dx * dx);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double ux = (f.u[i + 1] - f.u[i - 1]) * inv2dx;
        const double vr = w.vface[i];
        const double vl = w.vface[i - 1];

        out.v[i] = ux;

        const double visc = gp.mu * ((f.u[i + 1] - f.u[i]) / vr - (f.u[i] - f.u[i - 1]) / vl) * invdx2;
        out.u[i] = -(w.p[i + 1] - w.p[i - 1]) * inv2dx + visc;

        const double kr = 0.5 * (w.kappa[i] + w.kappa[i + 1]);
        const double kl = 0.5 * (w.kappa[i - 1] + w.kappa[i]);
        const double cond =
            (kr * (f.theta[i + 1] - f.theta[i]) / vr - kl * (f.theta[i] - f.theta[i - 1]) / vl) * invdx2;
        const double heat = -f.theta[i] * w.p_th[i] * ux + cond + gp.mu * ux * ux / f.v[i] +
                            gp.lambda_heat * w.phi[i] * f.z[i];
        out.theta[i] = heat / w.e_th[i];

        const double diff = gp.d * ((f.z[i + 1] - f.z[i]) / (vr * vr) - (f.z[i] - f.z[i - 1]) / (vl * vl)) * invdx2;
        out.z[i] = diff - w.phi[i] * f.z[i];
    }
    out.v.front() = out.v.back() = 0.0;
    out.u.front() = out.u.back() = 0.0;
    out.theta.front() = out.theta.back() = 0.0;
    out.z.front() = out.z.back() = 0.0;
}

void check_finite(const Fields& f, double t) {
    for (std::size_t i = 0; i < f.v.size(); ++i) {
        const bool ok = f.v[i] > 0.0 && f.theta[i] > 0.0 && std::isfinite(f.v[i]) && std::isfinite(f.theta[i]) &&
                        std::isfinite(f.u[i]) && std::isfinite(f.z[i]);
        if (!ok) {
            throw BlowUpError("blow-up at cell " + std::to_string(i) + ", t = " + std::to_string(t) +
                                  ": v = " + std::to_string(f.v[i]) + ", theta = " + std::to_string(f.theta[i]),
                              i, t);
        }
    }
}

void set_edges(Fields& f, const waves::WaveState& left, const waves::WaveState& right) {
    const std::size_t last = f.v.size() - 1;
    f.v[0] = left.v;
    f.u[0] = left.u;
    f.theta[0] = left.theta;
    f.z[0] = 0.0;
    f.v[last] = right.v;
    f.u[last] = right.u;
    f.theta[last] = right.theta;
    f.z[last] = 0.0;
}

}  // namespace

// ---------------------------------------------------------------------------

Grid1D Grid1D::symmetric(double L, int n) {
    return Grid1D{-L, L, n};
}

std::vector<double> Grid1D::nodes() const {
    std::vector<double> xs(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) {
        xs[static_cast<std::size_t>(i)] = x(i);
    }
    if (n > 0) {
        xs.back() = x_right;
    }
    return xs;
}

void Grid1D::validate() const {
    if (n < 16) {
        throw ScenarioError("grid needs n >= 16 nodes, got " + std::to_string(n));
    }
    if (!(x_left < x_right) || !std::isfinite(x_left) || !std::isfinite(x_right)) {
        throw ScenarioError("grid needs finite x_left < x_right");
    }
}

double Perturbation::operator()(double x) const {
    const double r = (x - center) / width;
    switch (shape) {
        case Shape::Gaussian:
            return amplitude * std::exp(-0.5 * r * r);
        case Shape::Bump:
            if (std::abs(r) >= 1.0) {
                return 0.0;
            }
            return amplitude * std::exp(1.0 - 1.0 / (1.0 - r * r));
    }
    return 0.0;
}

double DtCandidates::min() const {
    return std::min({advective, thermal, viscous, species, reaction});
}

// ---------------------------------------------------------------------------

SimulationState::SimulationState(const GasParams& gp, const RiemannData& rd, const Grid1D& grid,
                                 FieldSnapshot initial, const waves::WaveOptions& opts)
    : gp_(gp), grid_(grid), x_(grid.nodes()), snap_(std::move(initial)) {
    gp_.validate();
    grid_.validate();
    const auto n = static_cast<std::size_t>(grid_.n);
    if (snap_.v.size() != n || snap_.u.size() != n || snap_.theta.size() != n || snap_.z.size() != n) {
        throw ScenarioError("initial snapshot does not match the grid size");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(snap_.v[i] > 0.0) || !(snap_.theta[i] > 0.0) || !std::isfinite(snap_.v[i]) ||
            !std::isfinite(snap_.theta[i]) || !std::isfinite(snap_.u[i])) {
            throw ScenarioError("initial data must have v > 0 and theta > 0 (node " + std::to_string(i) +
                                ", x = " + std::to_string(x_[i]) + ")");
        }
        if (!(snap_.z[i] >= 0.0 && snap_.z[i] <= 1.0)) {
            throw ScenarioError("initial reactant fraction must lie in [0, 1] (node " + std::to_string(i) +
                                ", x = " + std::to_string(x_[i]) + ")");
        }
    }
    wave_ = std::make_shared<const waves::SmoothWave>(gp_, rd, opts);
    sampler_ = std::make_shared<waves::GridSampler>(*wave_, x_);
}

WaveProfile SimulationState::profile() const {
    return profile_at(snap_.t);
}

WaveProfile SimulationState::profile_at(double t) const {
    if (!profile_cache_ || profile_cache_->t != t) {
        profile_cache_ = sampler_->sample(t);
    }
    return *profile_cache_;
}

SimulationState::EdgeValues SimulationState::edges_at(double t) const {
    return {wave_->eval(t, x_.front(), &edge_memo_[0]), wave_->eval(t, x_.back(), &edge_memo_[1])};
}

SimulationState initialize(const GasParams& gp, const RiemannData& rd, const Grid1D& grid,
                           const std::vector<Perturbation>& perturbations, const waves::WaveOptions& opts) {
    grid.validate();
    for (std::size_t k = 0; k < perturbations.size(); ++k) {
        const auto& p = perturbations[k];
        if (!(p.width > 0.0) || !std::isfinite(p.amplitude) || !std::isfinite(p.center)) {
            throw ScenarioError("perturbation " + std::to_string(k) + ": width must be > 0 and values finite");
        }
        if (std::abs(p(grid.x_left)) >= kEdgeTol || std::abs(p(grid.x_right)) >= kEdgeTol) {
            throw ScenarioError("perturbation " + std::to_string(k) + " does not vanish at the domain edges");
        }
    }

    const waves::SmoothWave wave(gp, rd, opts);
    const auto xs = grid.nodes();
    waves::GridSampler sampler(wave, xs);
    const WaveProfile prof = sampler.sample(0.0);

    FieldSnapshot snap;
    snap.t = 0.0;
    snap.v = prof.V;
    snap.u = prof.U;
    snap.theta = prof.Theta;
    snap.z.assign(xs.size(), 0.0);
    for (const auto& p : perturbations) {
        std::vector<double>* target = nullptr;
        switch (p.field) {
            case Field::V: target = &snap.v; break;
            case Field::U: target = &snap.u; break;
            case Field::Theta: target = &snap.theta; break;
            case Field::Z: target = &snap.z; break;
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            (*target)[i] += p(xs[i]);
        }
    }
    return SimulationState(gp, rd, grid, std::move(snap), opts);
}

// ---------------------------------------------------------------------------

DtCandidates dt_candidates(const SimulationState& state) {
    const auto& gp = state.gas();
    const auto& s = state.snapshot();
    const double dx = state.grid().dx();
    const double dx2 = dx * dx;
    const double inf = std::numeric_limits<double>::infinity();
    DtCandidates c{inf, inf, inf, inf, inf};
    for (std::size_t i = 0; i < s.size(); ++i) {
        const thermo::ThermoState st{s.v[i], s.theta[i]};
        const double sound = std::sqrt(std::max(-thermo::p_tilde_v_at(gp, st), 0.0));
        c.advective = std::min(c.advective, dx / (std::abs(s.u[i]) + sound));
        c.thermal = std::min(c.thermal, dx2 * s.v[i] * thermo::e_theta(gp, st) / (2.0 * thermo::conductivity(gp, st)));
        c.viscous = std::min(c.viscous, dx2 * s.v[i] / (2.0 * gp.mu));
        c.species = std::min(c.species, dx2 * s.v[i] * s.v[i] / (2.0 * gp.d));
        const double phi = thermo::reaction_rate(gp, s.theta[i]);
        if (phi > 0.0) {
            c.reaction = std::min(c.reaction, 1.0 / phi);
        }
    }
    return c;
}

double stable_dt(const SimulationState& state, double cfl) {
    return cfl * dt_candidates(state).min();
}

void step(SimulationState& state, double dt) {
    state.advance(dt, state.snapshot().t + dt);
}

void SimulationState::advance(double dt, double t1) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw DomainError("step: dt must be positive and finite");
    }
    auto& snap = snap_;
    const std::size_t n = snap.size();
    const double dx = grid_.dx();

    Fields f0(n);
    f0.v = snap.v;
    f0.u = snap.u;
    f0.theta = snap.theta;
    f0.z = snap.z;
    Work work(n);
    Fields k(n);

    // Both Heun stages see the boundary data of the new time level.
    const auto edges = edges_at(t1);

    rhs(gp_, dx, f0, work, k);
    Fields f1(n);
    for (std::size_t i = 0; i < n; ++i) {
        f1.v[i] = f0.v[i] + dt * k.v[i];
        f1.u[i] = f0.u[i] + dt * k.u[i];
        f1.theta[i] = f0.theta[i] + dt * k.theta[i];
        f1.z[i] = f0.z[i] + dt * k.z[i];
    }
    set_edges(f1, edges.left, edges.right);
    check_finite(f1, t1);

    rhs(gp_, dx, f1, work, k);
    for (std::size_t i = 0; i < n; ++i) {
        f1.v[i] = 0.5 * (f0.v[i] + f1.v[i] + dt * k.v[i]);
        f1.u[i] = 0.5 * (f0.u[i] + f1.u[i] + dt * k.u[i]);
        f1.theta[i] = 0.5 * (f0.theta[i] + f1.theta[i] + dt * k.theta[i]);
        f1.z[i] = 0.5 * (f0.z[i] + f1.z[i] + dt * k.z[i]);
    }
    set_edges(f1, edges.left, edges.right);
    check_finite(f1, t1);

    snap.v = std::move(f1.v);
    snap.u = std::move(f1.u);
    snap.theta = std::move(f1.theta);
    snap.z = std::move(f1.z);
    snap.t = t1;
    ++steps_;
}

// ---------------------------------------------------------------------------

std::vector<ScheduledOutput> output_schedule(const RunSettings& settings) {
    std::vector<ScheduledOutput> out;
    auto add = [&](double t, bool record, bool snapshot) {
        for (auto& o : out) {
            if (o.t == t) {
                o.event.record = o.event.record || record;
                o.event.snapshot = o.event.snapshot || snapshot;
                return;
            }
        }
        out.push_back({t, {record, snapshot}});
    };
    const double T = settings.t_end;
    if (settings.output_interval > 0.0) {
        for (long k = 0;; ++k) {
            const double t = static_cast<double>(k) * settings.output_interval;
            if (t > T * (1.0 + 1e-12)) {
                break;
            }
            add(std::min(t, T), true, false);
        }
    }
    add(0.0, true, false);
    add(T, true, false);
    for (double t : settings.snapshot_times) {
        if (t >= 0.0 && t <= T) {
            add(t, false, true);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
    return out;
}

RunStatus run(SimulationState& state, const RunSettings& settings, const OutputCallback& on_output) {
    if (!(settings.t_end >= 0.0) || !(settings.cfl > 0.0 && settings.cfl <= 1.0) ||
        !(settings.output_interval > 0.0)) {
        throw DomainError("run: need t_end >= 0, 0 < cfl <= 1 and output_interval > 0");
    }
    RunStatus status;
    const auto schedule = output_schedule(settings);
    for (const auto& item : schedule) {
        try {
            while (state.snapshot().t < item.t) {
                const double remaining = item.t - state.snapshot().t;
                double dt = stable_dt(state, settings.cfl);
                // Avoid leaving a sliver step just before the output time.
                if (dt >= remaining || remaining - dt < 1e-12 * std::max(1.0, item.t)) {
                    dt = remaining;
                }
                state.advance(dt, dt == remaining ? item.t : state.snapshot().t + dt);
                ++status.steps;
            }
        } catch (const BlowUpError& e) {
            status.blowup = BlowUpInfo{e.what(), e.cell(), e.time()};
            return status;
        }
        if (on_output) {
            on_output(state, item.event);
        }
    }
    return status;
}

}  // namespace radwave::solver
