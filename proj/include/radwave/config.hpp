#pragma once

#include "radwave/solver.hpp"
#include "radwave/thermo.hpp"
#include "radwave/waves.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radwave::config {

// Far-field block. theta_plus may be omitted, in which case it is the
// temperature on the left state's isentrope at v_plus.
struct RiemannConfig {
    double v_minus = 1.0;
    double u_minus = 0.0;
    double theta_minus = 1.0;
    double v_plus = 1.0;
    double u_plus = 0.0;
    std::optional<double> theta_plus;
    double entropy_tol = waves::kDefaultEntropyTol;

    bool operator==(const RiemannConfig&) const = default;
};

struct GridConfig {
    double L = 100.0;
    int n = 512;

    bool operator==(const GridConfig&) const = default;
};

struct TimeConfig {
    double t_end = 10.0;
    double cfl = 0.4;
    double output_interval = 1.0;
    std::vector<double> snapshot_times;

    bool operator==(const TimeConfig&) const = default;
};

struct ScenarioConfig {
    std::string label;
    std::uint64_t seed = 0;
    thermo::GasParams gas;
    RiemannConfig riemann;
    waves::WaveOptions wave;
    GridConfig grid;
    TimeConfig time;
    std::vector<solver::Perturbation> perturbations;

    solver::Grid1D grid1d() const { return solver::Grid1D::symmetric(grid.L, grid.n); }
    solver::RunSettings run_settings() const;

    bool operator==(const ScenarioConfig&) const = default;
};

// Strict JSON parsing: unknown keys, wrong types and violated constraints
// are all collected and reported together in a ConfigError, each message
// prefixed by its JSON path (for example "riemann.v_minus").
ScenarioConfig parse_config(std::string_view text);

// Throws ConfigError if the file cannot be read.
ScenarioConfig load_config(const std::filesystem::path& path);

// Canonical JSON text; parse_config(dump_config(c)) == c.
std::string dump_config(const ScenarioConfig& cfg);

// Far-field data of a validated config.
waves::RiemannData riemann_data(const ScenarioConfig& cfg);

}  // namespace radwave::config
