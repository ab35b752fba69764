#pragma once

#include "radwave/thermo.hpp"
#include "radwave/waves.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace radwave::solver {

using thermo::GasParams;
using waves::RiemannData;
using waves::WaveProfile;

// Uniform node grid on [x_left, x_right]; the end nodes carry boundary data.
struct Grid1D {
    double x_left = -100.0;
    double x_right = 100.0;
    int n = 512;

    static Grid1D symmetric(double L, int n);

    double dx() const { return (x_right - x_left) / (n - 1); }
    double x(int i) const { return x_left + i * dx(); }
    std::vector<double> nodes() const;

    // Throws ScenarioError.
    void validate() const;

    bool operator==(const Grid1D&) const = default;
};

struct FieldSnapshot {
    double t = 0.0;
    std::vector<double> v;
    std::vector<double> u;
    std::vector<double> theta;
    std::vector<double> z;

    std::size_t size() const { return v.size(); }
};

enum class Field { V, U, Theta, Z };
enum class Shape { Gaussian, Bump };

// gaussian: amplitude * exp(-(x - center)^2 / (2 width^2))
// bump:     amplitude * exp(1 - 1/(1 - r^2)) for r = |x - center| / width < 1, else 0
struct Perturbation {
    Field field = Field::V;
    Shape shape = Shape::Gaussian;
    double amplitude = 0.0;
    double center = 0.0;
    double width = 1.0;

    double operator()(double x) const;

    bool operator==(const Perturbation&) const = default;
};

// Largest admissible step per mechanism, before the cfl factor.
struct DtCandidates {
    double advective;  // dx / (|u| + c)
    double thermal;    // dx^2 v e_theta / (2 kappa)
    double viscous;    // dx^2 v / (2 mu)
    double species;    // dx^2 v^2 / (2 d)
    double reaction;   // 1 / phi(theta)

    double min() const;
};

class SimulationState {
public:
    SimulationState(const GasParams& gp, const RiemannData& rd, const Grid1D& grid, FieldSnapshot initial,
                    const waves::WaveOptions& opts = {});

    const GasParams& gas() const { return gp_; }
    const RiemannData& data() const { return wave_->data(); }
    const Grid1D& grid() const { return grid_; }
    const std::vector<double>& x() const { return x_; }
    const waves::SmoothWave& wave() const { return *wave_; }
    const FieldSnapshot& snapshot() const { return snap_; }
    std::size_t steps() const { return steps_; }

    // Smooth wave sampled on the grid at the current time. The last sample is
    // cached so that repeated queries at one time return identical values.
    WaveProfile profile() const;
    WaveProfile profile_at(double t) const;

    // Heun step of size dt whose result is stamped with time t_new (normally
    // t + dt; run() passes the exact output time on landing steps).
    void advance(double dt, double t_new);

private:

    // Values (V, U, Theta) at the two end nodes at time t.
    struct EdgeValues {
        waves::WaveState left;
        waves::WaveState right;
    };
    EdgeValues edges_at(double t) const;

    GasParams gp_;
    Grid1D grid_;
    std::vector<double> x_;
    std::shared_ptr<const waves::SmoothWave> wave_;
    std::shared_ptr<waves::GridSampler> sampler_;
    FieldSnapshot snap_;
    std::size_t steps_ = 0;
    mutable waves::ColumnMemo edge_memo_[2];
    mutable std::optional<WaveProfile> profile_cache_;
};

// Smooth wave at t = 0 plus the summed perturbations; z starts from the z
// perturbations alone. Throws ScenarioError when a perturbation does not
// vanish at the edges (|.| >= 1e-8), makes v or theta nonpositive, or puts z
// outside [0, 1].
SimulationState initialize(const GasParams& gp, const RiemannData& rd, const Grid1D& grid,
                           const std::vector<Perturbation>& perturbations, const waves::WaveOptions& opts = {});

DtCandidates dt_candidates(const SimulationState& state);
double stable_dt(const SimulationState& state, double cfl);

// One Heun step. Requires dt <= stable_dt(state, 1). Throws BlowUpError (and
// leaves the state untouched) if v or theta become nonpositive or NaN.
void step(SimulationState& state, double dt);

struct RunSettings {
    double t_end = 0.0;
    double cfl = 0.4;
    double output_interval = 1.0;
    std::vector<double> snapshot_times;
};

struct OutputEvent {
    bool record = false;    // on the output_interval lattice (or t_end)
    bool snapshot = false;  // one of snapshot_times
};

struct BlowUpInfo {
    std::string message;
    std::size_t cell = 0;
    double t = 0.0;
};

struct RunStatus {
    std::optional<BlowUpInfo> blowup;
    std::size_t steps = 0;

    bool completed() const { return !blowup.has_value(); }
};

using OutputCallback = std::function<void(const SimulationState&, OutputEvent)>;

// Advances to t_end with dt = stable_dt(state, cfl), shortened to land exactly
// on every output time. The callback fires at t = 0 and every output time.
RunStatus run(SimulationState& state, const RunSettings& settings, const OutputCallback& on_output);

// Merged, strictly increasing output schedule for the settings.
struct ScheduledOutput {
    double t;
    OutputEvent event;
};
std::vector<ScheduledOutput> output_schedule(const RunSettings& settings);

}  // namespace radwave::solver
