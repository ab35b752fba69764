#pragma once

#include <optional>

namespace radwave::thermo {

// Physical constants of the viscous radiative reactive gas. Dimensionless.
struct GasParams {
    double R = 1.0;            // gas constant
    double Cv = 1.5;           // specific heat at constant volume
    double a = 0.0;            // radiation constant
    double mu = 1.0;           // bulk viscosity
    double kappa1 = 1.0;       // conductivity: kappa1 + kappa2 * v * theta^b
    double kappa2 = 1.0;
    double b = 3.0;
    double d = 1.0;            // species diffusion
    double lambda_heat = 0.0;  // heat release per unit reactant
    double K = 0.0;            // Arrhenius prefactor
    double A = 0.0;            // activation energy
    double beta = 0.0;         // temperature exponent of the rate

    // Cv defaults to 3R/2 for the radiative gas.
    static GasParams radiative(double R = 1.0) {
        GasParams gp;
        gp.R = R;
        gp.Cv = 1.5 * R;
        return gp;
    }

    // Throws DomainError naming the first violated constraint.
    void validate() const;

    bool operator==(const GasParams&) const = default;
};

struct ThermoState {
    double v;
    double theta;
};

struct EntropyState {
    double v;
    double s;
};

struct HessianReport {
    double p_vv;
    double p_vs;
    double p_ss;
    double det;
    bool convex;
};

double pressure(const GasParams& gp, ThermoState st);
double internal_energy(const GasParams& gp, ThermoState st);
double entropy(const GasParams& gp, ThermoState st);

// Partial derivatives in (v, theta).
double p_theta(const GasParams& gp, ThermoState st);   // R/v + 4/3 a theta^3
double e_theta(const GasParams& gp, ThermoState st);   // Cv + 4 a v theta^3
double s_theta(const GasParams& gp, ThermoState st);   // Cv/theta + 4 a v theta^2
double s_v(const GasParams& gp, ThermoState st);       // 4/3 a theta^3 + R/v

inline constexpr double kDefaultInversionTol = 1e-12;

// The unique theta > 0 with entropy(v, theta) = s. Always polished to
// rounding level; `tol` is the guaranteed relative residual bound.
// Throws DomainError for v <= 0 and ConvergenceError when the root lies
// outside [1e-12, 1e12].
double temperature_from_entropy(const GasParams& gp, EntropyState es, double tol = kDefaultInversionTol);

// Pressure and its derivatives at fixed entropy, p~(v, s).
double p_tilde(const GasParams& gp, EntropyState es);
double p_tilde_v(const GasParams& gp, EntropyState es);
double p_tilde_s(const GasParams& gp, EntropyState es);

// Same derivatives evaluated from a known (v, theta), skipping the inversion.
double p_tilde_v_at(const GasParams& gp, ThermoState st);
HessianReport p_tilde_hessian_at(const GasParams& gp, ThermoState st);

HessianReport p_tilde_hessian(const GasParams& gp, EntropyState es);

enum class Family { One = 1, Three = 3 };

// lambda_1 = -sqrt(-p~_v), lambda_3 = +sqrt(-p~_v).
double char_speed(const GasParams& gp, Family family, EntropyState es);
double char_speed_at(const GasParams& gp, Family family, ThermoState st);

double reaction_rate(const GasParams& gp, double theta);
double conductivity(const GasParams& gp, ThermoState st);

// Largest a (to within rel_tol) such that p~ is convex at every point of an
// n x n grid covering [v_lo, v_hi] x [theta_lo, theta_hi]. Other parameters
// are taken from gp. Returns nullopt if the grid is not convex even at a = 0.
struct ConvexityBox {
    double v_lo = 0.5;
    double v_hi = 2.0;
    double theta_lo = 0.5;
    double theta_hi = 2.0;
    int n = 41;
};

bool convex_on_box(const GasParams& gp, const ConvexityBox& box);
std::optional<double> convexity_threshold(GasParams gp, const ConvexityBox& box, double a_max = 1.0,
                                          double rel_tol = 1e-6);

}  // namespace radwave::thermo
