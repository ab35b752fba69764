#include "radwave/scenario.hpp"

#include <chrono>

namespace radwave::scenario {

ScenarioResult run_scenario(const config::ScenarioConfig& cfg, const ProgressFn& progress) {
    const auto start = std::chrono::steady_clock::now();
    const auto rd = config::riemann_data(cfg);
    auto state = solver::initialize(cfg.gas, rd, cfg.grid1d(), cfg.perturbations, cfg.wave);

    ScenarioResult result;
    result.status = solver::run(state, cfg.run_settings(), [&](const solver::SimulationState& s, solver::OutputEvent ev) {
        const auto profile = s.profile();
        if (ev.record) {
            result.records.push_back(diagnostics::make_record(s.gas(), s.snapshot(), profile, s.wave().fan()));
            if (progress) {
                progress(result.records.back());
            }
        }
        if (ev.snapshot) {
            result.snapshots.push_back({s.snapshot(), profile});
        }
    });
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace radwave::scenario
