#include <doctest.h>

#include "oracles.hpp"

#include "radwave/diagnostics.hpp"
#include "radwave/errors.hpp"
#include "radwave/solver.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace radwave;
using namespace radwave::solver;
using doctest::Approx;

namespace {

RiemannData constant_data(const GasParams& gp, double v, double u, double theta) {
    return RiemannData::make(gp, {v, u, theta}, {v, u, theta});
}

RiemannData rarefaction_data(const GasParams& gp) {
    const double s = thermo::entropy(gp, {1.0, 1.0});
    const double theta_plus = thermo::temperature_from_entropy(gp, {1.05, s});
    return RiemannData::make(gp, {1.0, 0.0, 1.0}, {1.05, 0.15, theta_plus});
}

GasParams radiative_gas() {
    auto gp = GasParams::radiative(1.0);
    gp.a = 1e-3;
    gp.b = 6.5;
    gp.beta = 1.0;
    gp.lambda_heat = 1.0;
    gp.K = 1.0;
    gp.A = 1.0;
    return gp;
}

// Transport nearly switched off so the fixed edge values do not reach the center.
GasParams reactor_gas(double lambda_heat) {
    auto gp = radiative_gas();
    gp.lambda_heat = lambda_heat;
    gp.mu = gp.kappa1 = gp.kappa2 = gp.d = 1e-6;
    return gp;
}

// Uniform (v, 0, theta, z0) inside, with z = 0 on the two end nodes.
SimulationState uniform_state(const GasParams& gp, const Grid1D& grid, double v, double theta, double z0) {
    const auto n = static_cast<std::size_t>(grid.n);
    FieldSnapshot s;
    s.v.assign(n, v);
    s.u.assign(n, 0.0);
    s.theta.assign(n, theta);
    s.z.assign(n, z0);
    s.z.front() = s.z.back() = 0.0;
    return SimulationState(gp, constant_data(gp, v, 0.0, theta), grid, s);
}

}  // namespace

TEST_CASE("Grid1D") {
    const auto g = Grid1D::symmetric(100.0, 512);
    CHECK(g.dx() == Approx(200.0 / 511.0));
    const auto xs = g.nodes();
    CHECK(xs.size() == 512);
    CHECK(xs.front() == -100.0);
    CHECK(xs.back() == 100.0);
    CHECK_NOTHROW(g.validate());
    CHECK_THROWS_AS(Grid1D::symmetric(10.0, 15).validate(), ScenarioError);
    CHECK_THROWS_AS((Grid1D{1.0, 1.0, 64}).validate(), ScenarioError);
}

TEST_CASE("perturbation shapes") {
    const Perturbation g{Field::V, Shape::Gaussian, 0.1, 2.0, 3.0};
    CHECK(g(2.0) == 0.1);
    CHECK(g(5.0) == Approx(0.1 * std::exp(-0.5)));
    const Perturbation b{Field::U, Shape::Bump, 0.2, 0.0, 1.0};
    CHECK(b(0.0) == Approx(0.2));
    CHECK(b(1.0) == 0.0);
    CHECK(b(-3.0) == 0.0);
    CHECK(b(0.5) == Approx(0.2 * std::exp(1.0 - 1.0 / 0.75)));
}

TEST_CASE("initialize") {
    const auto gp = radiative_gas();
    const auto grid = Grid1D::symmetric(50.0, 101);

    SUBCASE("zero perturbation on zero-strength data is constant") {
        auto st = initialize(gp, constant_data(gp, 1.2, 0.1, 0.9), grid, {});
        const auto& s = st.snapshot();
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(s.v[i] == 1.2);
            CHECK(s.u[i] == 0.1);
            CHECK(s.theta[i] == 0.9);
            CHECK(s.z[i] == 0.0);
        }
    }
    SUBCASE("Gaussian on v adds its amplitude at the center") {
        const auto rd = rarefaction_data(gp);
        auto st = initialize(gp, rd, grid, {{Field::V, Shape::Gaussian, 0.1, 0.0, 2.0}});
        const waves::SmoothWave sw(gp, rd);
        CHECK(st.snapshot().v[50] == Approx(sw.eval(0.0, 0.0).v + 0.1).epsilon(1e-14));
        CHECK(st.snapshot().u[50] == Approx(sw.eval(0.0, 0.0).u).epsilon(1e-14));
    }
    SUBCASE("z Gaussian of amplitude 1") {
        auto st = initialize(gp, rarefaction_data(gp), grid, {{Field::Z, Shape::Gaussian, 1.0, 0.0, 2.0}});
        const auto& z = st.snapshot().z;
        CHECK(*std::max_element(z.begin(), z.end()) == 1.0);
        CHECK(*std::min_element(z.begin(), z.end()) >= 0.0);
    }
    SUBCASE("errors") {
        const auto rd = rarefaction_data(gp);
        CHECK_THROWS_AS(initialize(gp, rd, grid, {{Field::V, Shape::Gaussian, 0.1, 0.0, 20.0}}), ScenarioError);
        CHECK_THROWS_AS(initialize(gp, rd, grid, {{Field::V, Shape::Gaussian, -2.0, 0.0, 2.0}}), ScenarioError);
        CHECK_THROWS_AS(initialize(gp, rd, grid, {{Field::Theta, Shape::Bump, -5.0, 0.0, 2.0}}), ScenarioError);
        CHECK_THROWS_AS(initialize(gp, rd, grid, {{Field::Z, Shape::Gaussian, 1.5, 0.0, 2.0}}), ScenarioError);
        CHECK_THROWS_AS(initialize(gp, rd, grid, {{Field::U, Shape::Gaussian, 0.1, 0.0, 0.0}}), ScenarioError);
        CHECK_THROWS_AS(initialize(gp, rd, Grid1D::symmetric(50.0, 8), {}), ScenarioError);
    }
}

TEST_CASE("dt candidates") {
    SUBCASE("advective limit") {
        auto gp = GasParams::radiative(1.0);
        gp.mu = gp.kappa1 = gp.kappa2 = gp.d = 1e-12;
        const auto grid = Grid1D::symmetric(10.0, 101);
        auto st = initialize(gp, constant_data(gp, 1.0, 0.0, 1.0), grid, {});
        const double c = std::sqrt(5.0 / 3.0);
        CHECK(stable_dt(st, 0.4) == Approx(0.4 * grid.dx() / c).epsilon(1e-12));
        CHECK(dt_candidates(st).reaction == std::numeric_limits<double>::infinity());
    }
    SUBCASE("diffusive candidates scale with dx^2") {
        const auto gp = radiative_gas();
        const auto rd = constant_data(gp, 1.0, 0.3, 1.1);
        auto fine = initialize(gp, rd, Grid1D{0.0, 10.0, 201}, {});
        auto coarse = initialize(gp, rd, Grid1D{0.0, 10.0, 101}, {});
        const auto f = dt_candidates(fine);
        const auto c = dt_candidates(coarse);
        CHECK(c.thermal / f.thermal == Approx(4.0).epsilon(1e-12));
        CHECK(c.viscous / f.viscous == Approx(4.0).epsilon(1e-12));
        CHECK(c.species / f.species == Approx(4.0).epsilon(1e-12));
        CHECK(c.advective / f.advective == Approx(2.0).epsilon(1e-12));
        CHECK(c.reaction == f.reaction);
        CHECK(f.reaction == Approx(1.0 / thermo::reaction_rate(gp, 1.1)));
        CHECK(f.viscous == Approx(0.05 * 0.05 / 2.0));
    }
    SUBCASE("standard scenario") {
        const auto gp = radiative_gas();
        auto st = initialize(gp, rarefaction_data(gp), Grid1D::symmetric(100.0, 512),
                             {{Field::V, Shape::Gaussian, 0.3, 0.0, 3.0}});
        const double dt = stable_dt(st, 0.4);
        CHECK(dt > 0.0);
        CHECK(std::isfinite(dt));
    }
}

TEST_CASE("constant state is a fixed point") {
    const auto gp = radiative_gas();
    auto st = initialize(gp, constant_data(gp, 1.3, 0.2, 0.8), Grid1D::symmetric(20.0, 256), {});
    const auto initial = st.snapshot();
    const double dt = stable_dt(st, 0.4);
    for (int k = 0; k < 1000; ++k) {
        step(st, dt);
    }
    CHECK(st.steps() == 1000);
    CHECK(st.snapshot().t == Approx(1000 * dt));
    double drift = 0.0;
    for (std::size_t i = 0; i < initial.size(); ++i) {
        drift = std::max({drift, std::abs(st.snapshot().v[i] - initial.v[i]),
                          std::abs(st.snapshot().u[i] - initial.u[i]),
                          std::abs(st.snapshot().theta[i] - initial.theta[i]),
                          std::abs(st.snapshot().z[i] - initial.z[i])});
    }
    CHECK(drift <= 1e-12);
}

TEST_CASE("reactor without heat release") {
    const auto gp = reactor_gas(0.0);
    const double theta = 1.0;
    const double z0 = 0.8;
    auto st = uniform_state(gp, Grid1D::symmetric(20.0, 256), 1.0, theta, z0);
    const double phi = thermo::reaction_rate(gp, theta);
    const double t_end = 1.0 / phi;
    const auto status = run(st, {t_end, 0.4, t_end, {}}, nullptr);
    REQUIRE(status.completed());
    CHECK(st.snapshot().t == t_end);
    const std::size_t mid = 128;
    CHECK(oracle::rel_err(st.snapshot().z[mid], z0 * std::exp(-phi * t_end)) <= 1e-4);
    CHECK(st.snapshot().theta[mid] == theta);
}

TEST_CASE("reactor with heat release") {
    const auto gp = reactor_gas(2.0);
    const double v = 1.0;
    const double theta0 = 1.0;
    const double z0 = 0.8;
    auto st = uniform_state(gp, Grid1D::symmetric(20.0, 256), v, theta0, z0);
    const double t_end = 1.0 / thermo::reaction_rate(gp, theta0);
    const std::size_t mid = 128;
    std::vector<double> th;
    std::vector<double> z;
    const auto status = run(st, {t_end, 0.4, 0.25, {}}, [&](const SimulationState& s, OutputEvent) {
        th.push_back(s.snapshot().theta[mid]);
        z.push_back(s.snapshot().z[mid]);
    });
    REQUIRE(status.completed());
    for (std::size_t k = 1; k < th.size(); ++k) {
        CHECK(th[k] > th[k - 1]);
        CHECK(z[k] < z[k - 1]);
    }
    const auto ref = oracle::reactor_rk4(gp, v, {theta0, z0}, t_end);
    CHECK(oracle::rel_err(st.snapshot().theta[mid], ref.theta) <= 1e-3);
    CHECK(oracle::rel_err(st.snapshot().z[mid], ref.z) <= 1e-3);
}

TEST_CASE("output schedule") {
    const auto sched = output_schedule({2.5, 0.4, 1.0, {0.5, 2.0}});
    std::vector<double> ts;
    for (const auto& s : sched) {
        ts.push_back(s.t);
    }
    CHECK(ts == std::vector<double>{0.0, 0.5, 1.0, 2.0, 2.5});
    CHECK(sched[1].event.snapshot);
    CHECK_FALSE(sched[1].event.record);
    CHECK(sched[3].event.snapshot);
    CHECK(sched[3].event.record);
    CHECK(sched[4].event.record);
}

TEST_CASE("run lands on output times") {
    const auto gp = radiative_gas();
    auto st = initialize(gp, rarefaction_data(gp), Grid1D::symmetric(30.0, 128),
                         {{Field::U, Shape::Gaussian, 0.1, 0.0, 2.0}, {Field::Z, Shape::Gaussian, 0.5, 0.0, 2.0}});
    std::vector<double> times;
    const auto status = run(st, {1.0, 0.4, 0.25, {0.3}}, [&](const SimulationState& s, OutputEvent) {
        times.push_back(s.snapshot().t);
    });
    CHECK(status.completed());
    CHECK(status.steps == st.steps());
    CHECK(times == std::vector<double>{0.0, 0.25, 0.3, 0.5, 0.75, 1.0});
}

TEST_CASE("t_end = 0 gives one output at the initial state") {
    const auto gp = radiative_gas();
    auto st = initialize(gp, rarefaction_data(gp), Grid1D::symmetric(30.0, 64), {});
    const auto before = st.snapshot();
    int calls = 0;
    const auto status = run(st, {0.0, 0.4, 1.0, {}}, [&](const SimulationState&, OutputEvent e) {
        ++calls;
        CHECK(e.record);
    });
    CHECK(status.completed());
    CHECK(calls == 1);
    CHECK(st.snapshot().v == before.v);
    CHECK(st.steps() == 0);
}

TEST_CASE("runs are deterministic") {
    const auto gp = radiative_gas();
    auto make = [&] {
        return initialize(gp, rarefaction_data(gp), Grid1D::symmetric(30.0, 128),
                          {{Field::V, Shape::Gaussian, 0.2, 1.0, 2.0}, {Field::Z, Shape::Gaussian, 0.5, 0.0, 2.0}});
    };
    auto a = make();
    auto b = make();
    run(a, {2.0, 0.4, 1.0, {}}, nullptr);
    run(b, {2.0, 0.4, 1.0, {}}, nullptr);
    CHECK(a.snapshot().v == b.snapshot().v);
    CHECK(a.snapshot().u == b.snapshot().u);
    CHECK(a.snapshot().theta == b.snapshot().theta);
    CHECK(a.snapshot().z == b.snapshot().z);
}

TEST_CASE("blow-up is reported with cell and time") {
    const auto gp = radiative_gas();
    auto st = initialize(gp, rarefaction_data(gp), Grid1D::symmetric(30.0, 64),
                         {{Field::U, Shape::Gaussian, 0.5, 0.0, 1.0}});
    const auto before = st.snapshot();
    try {
        step(st, 50.0);
        FAIL("expected a blow-up");
    } catch (const BlowUpError& e) {
        CHECK(e.cell() > 0);
        CHECK(e.cell() < 63);
        CHECK(e.time() > 0.0);
    }
    CHECK(st.snapshot().v == before.v);
    CHECK(st.snapshot().t == 0.0);

    auto st2 = initialize(gp, rarefaction_data(gp), Grid1D::symmetric(30.0, 64),
                          {{Field::U, Shape::Gaussian, 0.5, 0.0, 1.0}});
    CHECK_THROWS_AS(step(st2, 0.0), DomainError);
}

TEST_CASE("reactant stays in [0, 1] and its mass does not grow") {
    const auto gp = radiative_gas();
    auto st = initialize(gp, rarefaction_data(gp), Grid1D::symmetric(40.0, 256),
                         {{Field::Theta, Shape::Gaussian, 0.3, 0.0, 3.0}, {Field::Z, Shape::Gaussian, 1.0, 0.0, 3.0}});
    std::vector<double> mass;
    const auto status = run(st, {5.0, 0.4, 0.5, {}}, [&](const SimulationState& s, OutputEvent) {
        const auto b = diagnostics::bounds_report(s.snapshot(), s.x());
        CHECK(b.min_z >= -1e-12);
        CHECK(b.max_z <= 1.0 + 1e-12);
        CHECK(b.min_v > 0.0);
        CHECK(b.min_theta > 0.0);
        mass.push_back(b.reactant_mass);
    });
    REQUIRE(status.completed());
    REQUIRE(mass.size() == 11);
    for (std::size_t k = 1; k < mass.size(); ++k) {
        CHECK(mass[k] <= mass[k - 1] + 1e-10);
    }
    CHECK(mass.back() < mass.front());
}

TEST_CASE("edges follow the smooth wave") {
    const auto gp = radiative_gas();
    const auto rd = rarefaction_data(gp);
    auto st = initialize(gp, rd, Grid1D::symmetric(10.0, 64), {});
    run(st, {3.0, 0.4, 3.0, {}}, nullptr);
    const auto w_left = st.wave().eval(3.0, -10.0);
    const auto w_right = st.wave().eval(3.0, 10.0);
    CHECK(st.snapshot().v.front() == w_left.v);
    CHECK(st.snapshot().u.back() == w_right.u);
    CHECK(st.snapshot().theta.back() == w_right.theta);
    CHECK(st.snapshot().z.front() == 0.0);
}
