#pragma once

#include "radwave/diagnostics.hpp"
#include "radwave/solver.hpp"
#include "radwave/waves.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace radwave::csv {

inline constexpr std::string_view kSnapshotHeader = "x,v,u,theta,z,V,U,Theta";
inline constexpr std::string_view kTimeseriesHeader =
    "t,sup_v,sup_u,sup_s,sup_z,eta_total,dissipation,h1_perturbation,min_v,max_v,min_theta,max_theta,min_z,max_z,"
    "reactant_mass";
inline constexpr std::string_view kConvexityHeader = "v,theta,a,det,p_vv,p_ss,convex";

// Shortest decimal that parses back to the same double.
std::string format_double(double x);

std::string snapshot_csv(const solver::FieldSnapshot& snap, const waves::WaveProfile& profile);

// Throws InternalError unless t is strictly increasing.
std::string timeseries_csv(const std::vector<diagnostics::DiagnosticsRecord>& records);

struct ConvexityRow {
    double v;
    double theta;
    double a;
    double det;
    double p_vv;
    double p_ss;
    bool convex;
};

std::string convexity_csv(const std::vector<ConvexityRow>& rows);

// Writes text to path; throws IoError naming the path on failure.
void write_text(const std::filesystem::path& path, std::string_view text);

void write_snapshot_csv(const solver::FieldSnapshot& snap, const waves::WaveProfile& profile,
                        const std::filesystem::path& path);
void write_timeseries_csv(const std::vector<diagnostics::DiagnosticsRecord>& records,
                          const std::filesystem::path& path);

// Numeric table read back from one of the files above. "true"/"false"
// cells read as 1/0.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    // Index of a header column; throws DomainError if absent.
    std::size_t column(std::string_view name) const;
    std::vector<double> values(std::string_view name) const;
};

Table parse_csv(std::string_view text);
Table read_csv(const std::filesystem::path& path);

}  // namespace radwave::csv
