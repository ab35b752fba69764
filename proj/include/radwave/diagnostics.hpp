#pragma once

#include "radwave/solver.hpp"
#include "radwave/thermo.hpp"
#include "radwave/waves.hpp"

#include <span>
#include <vector>

namespace radwave::diagnostics {

using solver::FieldSnapshot;
using thermo::GasParams;
using waves::WaveProfile;
using waves::WaveState;

// One row of the time-series output. Field order is the CSV column order.
struct DiagnosticsRecord {
    double t = 0.0;
    double sup_v = 0.0;
    double sup_u = 0.0;
    double sup_s = 0.0;
    double sup_z = 0.0;
    double eta_total = 0.0;
    double dissipation = 0.0;
    double h1_perturbation = 0.0;
    double min_v = 0.0;
    double max_v = 0.0;
    double min_theta = 0.0;
    double max_theta = 0.0;
    double min_z = 0.0;
    double max_z = 0.0;
    double reactant_mass = 0.0;
};

// Phi(x) = x - ln x - 1. Throws DomainError for x <= 0.
double phi_bregman(double x);

// Relative entropy of (v, u, theta) with respect to the wave state (V, U, Theta).
double relative_entropy_density(const GasParams& gp, const WaveState& cell, const WaveState& wave);

// Trapezoidal integral of the density over the profile's columns.
double total_relative_entropy(const GasParams& gp, const FieldSnapshot& snap, const WaveProfile& profile);

// Trapezoidal integral of mu Theta (du)_x^2 / (v theta) + kappa Theta (dtheta)_x^2 / (v theta^2),
// with du = u - U, dtheta = theta - Theta. Central differences inside,
// one-sided at the two ends.
double dissipation_rate(const GasParams& gp, const FieldSnapshot& snap, const WaveProfile& profile);

// Discrete H1 norm of (v - V, u - U, theta - Theta).
double h1_perturbation(const FieldSnapshot& snap, const WaveProfile& profile);

struct FanDistance {
    double sup_v = 0.0;
    double sup_u = 0.0;
    double sup_s = 0.0;
    double sup_z = 0.0;
};

// Componentwise sup distance to the Riemann fan evaluated at xi = x / t. At
// t = 0 each column uses the far-field state on its side of x = 0 (x = 0
// itself takes xi = 0).
FanDistance sup_distance_to_fan(const GasParams& gp, const FieldSnapshot& snap, std::span<const double> x,
                                const waves::RiemannFan& fan);

struct BoundsReport {
    double min_v = 0.0;
    double max_v = 0.0;
    double min_theta = 0.0;
    double max_theta = 0.0;
    double min_z = 0.0;
    double max_z = 0.0;
    double reactant_mass = 0.0;
};

BoundsReport bounds_report(const FieldSnapshot& snap, std::span<const double> x);

// All diagnostics for one output time.
DiagnosticsRecord make_record(const GasParams& gp, const FieldSnapshot& snap, const WaveProfile& profile,
                              const waves::RiemannFan& fan);

DiagnosticsRecord make_record(const solver::SimulationState& state);

}  // namespace radwave::diagnostics
