#pragma once

#include "radwave/thermo.hpp"

#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace radwave::waves {

using thermo::Family;
using thermo::GasParams;

// (v, u, theta) at one point. The reactant component of every wave object is zero.
struct WaveState {
    double v;
    double u;
    double theta;
};

struct IntermediateState {
    double v_m;
    double u_m;
    double theta_m;
};

inline constexpr double kDefaultEntropyTol = 1e-10;
inline constexpr double kCurveQuadratureTol = 1e-10;

// Far-field endpoint states sharing one entropy, with the derived wave
// strength delta = |v- - v+| + |u- - u+|.
struct RiemannData {
    double v_minus;
    double u_minus;
    double theta_minus;
    double v_plus;
    double u_plus;
    double theta_plus;
    double s_bar;
    double delta;
    IntermediateState mid;

    // Validates positivity, equal entropy within entropy_tol, and that the two
    // states connect through a 1-rarefaction and a 3-rarefaction. Throws
    // DomainError or RarefactionConfigError.
    static RiemannData make(const GasParams& gp, WaveState left, WaveState right,
                            double entropy_tol = kDefaultEntropyTol);

    WaveState left() const { return {v_minus, u_minus, theta_minus}; }
    WaveState right() const { return {v_plus, u_plus, theta_plus}; }
};

// ---------------------------------------------------------------------------
// Inviscid Burgers equation with smoothed step data.

struct BurgersSpec {
    double w_minus;
    double w_plus;
    double eps;
    double q;
    double Kq;

    // Requires w_minus <= w_plus, eps > 0, q > 3/2. Equal far speeds give the
    // constant solution.
    static BurgersSpec make(double w_minus, double w_plus, double eps, double q = 2.0);
};

// 1 / integral_0^inf (1 + y^2)^-q dy; closed form 4/pi for q = 2.
double burgers_normalization(double q);

double burgers_initial(const BurgersSpec& spec, double x);
double burgers_initial_slope(const BurgersSpec& spec, double x);

// Exact solution at (t, x) by characteristics: w0(x0) with x0 + t w0(x0) = x.
// `foot` optionally seeds the root search with the previous foot and receives
// the new one.
double burgers_eval(const BurgersSpec& spec, double t, double x, double tol = 1e-12, double* foot = nullptr);

// Centered rarefaction fan of the Burgers Riemann problem.
double burgers_fan(double w_minus, double w_plus, double xi);

// ---------------------------------------------------------------------------
// Rarefaction curves of the inviscid system at fixed entropy.

// integral_{v_a}^{v_b} sqrt(-p~_v(xi, s_bar)) dxi
double sound_speed_integral(const GasParams& gp, double s_bar, double v_a, double v_b,
                            double abs_tol = kCurveQuadratureTol);

// Unique v with lambda_family(v, s_bar) = omega. If `bracket` is given the
// root is sought there (endpoints are accepted when omega sits on them up to
// rounding); otherwise the search expands over [1e-8, 1e8].
// Throws DomainError when omega is not attained.
struct VolumeBracket {
    double lo;
    double hi;
};
double invert_char_speed(const GasParams& gp, Family family, double omega, double s_bar, double tol = 1e-12,
                         std::optional<VolumeBracket> bracket = std::nullopt);

// Family 1: u0 + integral_{v0}^{v} c; family 3: u0 - integral_{v0}^{v} c.
double rarefaction_curve_u(const GasParams& gp, Family family, double v0, double u0, double s_bar, double v);

// Solves for the constant state joining the 1- and 3-rarefaction curves.
// Throws RarefactionConfigError if the data does not form a rarefaction pair.
IntermediateState intermediate_state(const GasParams& gp, const RiemannData& rd, double tol = 1e-13);

// ---------------------------------------------------------------------------
// Exact self-similar solution of the inviscid Riemann problem.

class RiemannFan {
public:
    RiemannFan(const GasParams& gp, const RiemannData& rd);

    WaveState eval(double xi) const;

    // lambda_1(v-), lambda_1(v_m), lambda_3(v_m), lambda_3(v+).
    double lambda1_minus() const { return l1_minus_; }
    double lambda1_mid() const { return l1_mid_; }
    double lambda3_mid() const { return l3_mid_; }
    double lambda3_plus() const { return l3_plus_; }

    const GasParams& gas() const { return gp_; }
    const RiemannData& data() const { return rd_; }

private:
    GasParams gp_;
    RiemannData rd_;
    double l1_minus_;
    double l1_mid_;
    double l3_mid_;
    double l3_plus_;
};

WaveState riemann_fan_eval(const GasParams& gp, const RiemannData& rd, double xi);

// ---------------------------------------------------------------------------
// Smooth approximate rarefaction wave built from two Burgers solutions.

struct WaveOptions {
    std::optional<double> eps;  // defaults to delta
    double q = 2.0;

    bool operator==(const WaveOptions&) const = default;
};

// Per-column cache of the Burgers characteristic feet.
struct ColumnMemo {
    double foot1 = std::numeric_limits<double>::quiet_NaN();
    double foot3 = std::numeric_limits<double>::quiet_NaN();
};

struct WaveProfile {
    double t = 0.0;
    std::vector<double> x;
    std::vector<double> V;
    std::vector<double> U;
    std::vector<double> Theta;
    double v_m = 0.0;
    double u_m = 0.0;
    double theta_m = 0.0;
};

class SmoothWave {
public:
    SmoothWave(const GasParams& gp, const RiemannData& rd, const WaveOptions& opts = {});

    // (V, U, Theta)(t, x), built from the Burgers solutions at time t + 1.
    WaveState eval(double t, double x, ColumnMemo* memo = nullptr) const;

    const RiemannFan& fan() const { return fan_; }
    const GasParams& gas() const { return fan_.gas(); }
    const RiemannData& data() const { return fan_.data(); }
    bool trivial() const { return trivial_; }
    const BurgersSpec& burgers1() const { return b1_; }
    const BurgersSpec& burgers3() const { return b3_; }

private:
    RiemannFan fan_;
    bool trivial_;
    BurgersSpec b1_{};
    BurgersSpec b3_{};
};

WaveState smooth_wave_eval(const GasParams& gp, const RiemannData& rd, const WaveOptions& opts, double t, double x);

// Samples a SmoothWave on a fixed set of columns, reusing each column's
// characteristic feet from the previous call as root-search seeds.
class GridSampler {
public:
    GridSampler(const SmoothWave& wave, std::vector<double> x);

    WaveProfile sample(double t);
    const std::vector<double>& columns() const { return x_; }

private:
    const SmoothWave* wave_;
    std::vector<double> x_;
    std::vector<ColumnMemo> memo_;
};

// Fan sampled at xi = x / t (t > 0).
WaveProfile sample_fan(const RiemannFan& fan, double t, std::span<const double> x);

}  // namespace radwave::waves
