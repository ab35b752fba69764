#pragma once

#include "radwave/config.hpp"
#include "radwave/diagnostics.hpp"
#include "radwave/solver.hpp"

#include <functional>
#include <vector>

namespace radwave::scenario {

struct SnapshotOutput {
    solver::FieldSnapshot snapshot;
    waves::WaveProfile profile;
};

struct ScenarioResult {
    std::vector<diagnostics::DiagnosticsRecord> records;
    std::vector<SnapshotOutput> snapshots;
    solver::RunStatus status;
    double wall_seconds = 0.0;
};

using ProgressFn = std::function<void(const diagnostics::DiagnosticsRecord&)>;

// Builds the initial state from the config and runs it to time.t_end,
// collecting a diagnostics record at every output time and the requested
// snapshots. A blow-up stops the run; everything gathered so far is kept and
// status.blowup describes the failure.
ScenarioResult run_scenario(const config::ScenarioConfig& cfg, const ProgressFn& progress = {});

}  // namespace radwave::scenario
