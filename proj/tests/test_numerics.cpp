#include <doctest.h>

#include "radwave/errors.hpp"
#include "radwave/numerics.hpp"

#include <cmath>

using namespace radwave;
using namespace radwave::numerics;

TEST_CASE("integrate reproduces elementary integrals") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0) == doctest::Approx(M_E - 1.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return 1.0 / x; }, 1.0, 1000.0, 1e-12) ==
          doctest::Approx(std::log(1000.0)).epsilon(1e-12));
}

TEST_CASE("integrate handles reversed and empty ranges") {
    auto f = [](double x) { return x * x; };
    CHECK(integrate(f, 2.0, 0.0) == doctest::Approx(-8.0 / 3.0).epsilon(1e-14));
    CHECK(integrate(f, 1.5, 1.5) == 0.0);
}

TEST_CASE("integrate refines around a steep feature") {
    // integral of 1 / (1 + (100 x)^2) over [-1, 1] = atan(100) / 50
    const double got = integrate([](double x) { return 1.0 / (1.0 + 1e4 * x * x); }, -1.0, 1.0, 1e-13);
    CHECK(got == doctest::Approx(std::atan(100.0) / 50.0).epsilon(1e-12));
}

TEST_CASE("integrate gives up on a non-integrable singularity") {
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-10, 12), ConvergenceError);
}

TEST_CASE("solve_increasing converges to machine precision") {
    auto f = [](double x) { return ValueSlope{x * x - 2.0, 2.0 * x}; };
    const double r = solve_increasing(f, 0.0, 10.0, 5.0);
    CHECK(std::abs(r - std::sqrt(2.0)) <= 4e-16);
}

TEST_CASE("solve_increasing survives a bad slope") {
    // Newton with this slope would overshoot; bisection keeps it in the bracket.
    auto f = [](double x) { return ValueSlope{std::atan(x - 0.3), 1e-3}; };
    const double r = solve_increasing(f, -50.0, 50.0, 40.0);
    CHECK(r == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("solve_increasing rejects an unbracketed root") {
    auto f = [](double x) { return ValueSlope{x + 1.0, 1.0}; };
    CHECK_THROWS_AS(solve_increasing(f, 0.0, 1.0, 0.5), ConvergenceError);
}

TEST_CASE("solve_increasing returns exact endpoint roots") {
    auto f = [](double x) { return ValueSlope{x - 1.0, 1.0}; };
    CHECK(solve_increasing(f, 1.0, 3.0, 2.0) == 1.0);
    CHECK(solve_increasing(f, -1.0, 1.0, 0.0) == 1.0);
}

TEST_CASE("bisect_increasing") {
    const double r = bisect_increasing([](double x) { return x * x * x - 8.0; }, 0.0, 5.0, 1e-14);
    CHECK(r == doctest::Approx(2.0).epsilon(1e-13));
    CHECK_THROWS_AS(bisect_increasing([](double x) { return x + 10.0; }, 0.0, 5.0, 1e-12), ConvergenceError);
}
