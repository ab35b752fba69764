#include "radwave/cli.hpp"

#include "radwave/config.hpp"
#include "radwave/csv_io.hpp"
#include "radwave/errors.hpp"
#include "radwave/scenario.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>

namespace radwave::cli {

namespace fs = std::filesystem;

namespace {

struct Common {
    std::string config_path;
    std::string out_dir = ".";
    bool quiet = false;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("config", c.config_path, "Scenario configuration (JSON)")->required();
    sub->add_option("--out", c.out_dir, "Output directory")->capture_default_str();
    sub->add_flag("--quiet", c.quiet, "Suppress progress output");
}

fs::path prepare_out(const Common& c) {
    const fs::path dir(c.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError(dir.string() + ": cannot create output directory: " + ec.message());
    }
    return dir;
}

std::string time_tag(double t) {
    return "t" + csv::format_double(t);
}

// Snapshot whose solution columns equal the sampled profile and z = 0.
solver::FieldSnapshot profile_snapshot(const waves::WaveProfile& p) {
    solver::FieldSnapshot s;
    s.t = p.t;
    s.v = p.V;
    s.u = p.U;
    s.theta = p.Theta;
    s.z.assign(p.x.size(), 0.0);
    return s;
}

int cmd_simulate(const Common& c, std::ostream& out, std::ostream& err) {
    const auto cfg = config::load_config(c.config_path);
    const auto dir = prepare_out(c);
    scenario::ProgressFn progress;
    if (!c.quiet) {
        progress = [&out](const diagnostics::DiagnosticsRecord& r) {
            out << "t=" << csv::format_double(r.t) << " sup_v=" << r.sup_v << " sup_u=" << r.sup_u
                << " eta=" << r.eta_total << " min_v=" << r.min_v << " min_theta=" << r.min_theta << '\n';
        };
    }
    const auto result = scenario::run_scenario(cfg, progress);

    csv::write_timeseries_csv(result.records, dir / "timeseries.csv");
    for (const auto& s : result.snapshots) {
        csv::write_snapshot_csv(s.snapshot, s.profile, dir / ("snapshot_" + time_tag(s.snapshot.t) + ".csv"));
    }
    if (!result.status.completed()) {
        const auto& b = *result.status.blowup;
        nlohmann::ordered_json j;
        j["error"] = "blow-up";
        j["message"] = b.message;
        j["cell"] = b.cell;
        j["t"] = b.t;
        csv::write_text(dir / "error.json", j.dump(2) + "\n");
        err << "radwave: " << b.message << '\n';
        return kBlowUp;
    }
    if (!c.quiet) {
        out << "wrote " << (dir / "timeseries.csv").string() << " (" << result.records.size() << " records, "
            << result.snapshots.size() << " snapshots, " << result.status.steps << " steps)\n";
    }
    return kOk;
}

int cmd_wave(const Common& c, double t, std::ostream& out) {
    const auto cfg = config::load_config(c.config_path);
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("--t must be a finite time >= 0");
    }
    const auto dir = prepare_out(c);
    const auto rd = config::riemann_data(cfg);
    const waves::SmoothWave wave(cfg.gas, rd, cfg.wave);
    waves::GridSampler sampler(wave, cfg.grid1d().nodes());
    const auto profile = sampler.sample(t);
    const auto path = dir / ("wave_" + time_tag(t) + ".csv");
    csv::write_snapshot_csv(profile_snapshot(profile), profile, path);
    if (!c.quiet) {
        out << "wrote " << path.string() << '\n';
    }
    return kOk;
}

int cmd_riemann(const Common& c, double t, std::ostream& out) {
    const auto cfg = config::load_config(c.config_path);
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("--t must be a finite time > 0 for the self-similar fan");
    }
    const auto dir = prepare_out(c);
    const auto rd = config::riemann_data(cfg);
    const waves::RiemannFan fan(cfg.gas, rd);
    const auto xs = cfg.grid1d().nodes();
    const auto profile = waves::sample_fan(fan, t, xs);
    const auto path = dir / ("riemann_" + time_tag(t) + ".csv");
    csv::write_snapshot_csv(profile_snapshot(profile), profile, path);
    if (!c.quiet) {
        out << "wrote " << path.string() << '\n';
    }
    return kOk;
}

struct MapOptions {
    std::vector<double> a_list;
    std::vector<double> v_range{0.2, 5.0};
    std::vector<double> theta_range{0.2, 5.0};
    int n = 41;
};

int cmd_convexity(const Common& c, const MapOptions& m, std::ostream& out) {
    auto cfg = config::load_config(c.config_path);
    if (m.v_range.size() != 2 || m.theta_range.size() != 2 || !(m.v_range[0] > 0.0) ||
        !(m.v_range[1] > m.v_range[0]) || !(m.theta_range[0] > 0.0) || !(m.theta_range[1] > m.theta_range[0])) {
        throw DomainError("--v-range and --theta-range need 0 < lo < hi");
    }
    if (m.n < 2) {
        throw DomainError("--n must be >= 2");
    }
    for (double a : m.a_list) {
        if (!(a >= 0.0) || !std::isfinite(a)) {
            throw DomainError("--a-list entries must be finite and >= 0");
        }
    }
    const auto dir = prepare_out(c);
    std::vector<csv::ConvexityRow> rows;
    std::size_t convex = 0;
    for (double a : m.a_list) {
        auto gp = cfg.gas;
        gp.a = a;
        for (int i = 0; i < m.n; ++i) {
            const double v = m.v_range[0] + (m.v_range[1] - m.v_range[0]) * i / (m.n - 1);
            for (int j = 0; j < m.n; ++j) {
                const double th = m.theta_range[0] + (m.theta_range[1] - m.theta_range[0]) * j / (m.n - 1);
                const auto h = thermo::p_tilde_hessian_at(gp, {v, th});
                rows.push_back({v, th, a, h.det, h.p_vv, h.p_ss, h.convex});
                convex += h.convex ? 1 : 0;
            }
        }
    }
    const auto path = dir / "convexity_map.csv";
    csv::write_text(path, csv::convexity_csv(rows));
    if (!c.quiet) {
        out << "wrote " << path.string() << " (" << convex << " of " << rows.size() << " points convex)\n";
    }
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rarefaction waves of a viscous, radiative and reactive gas", "radwave"};
    app.require_subcommand(1);

    Common sim_c;
    auto* sim = app.add_subcommand("simulate", "Run the full viscous simulation of a scenario");
    add_common(sim, sim_c);

    Common wave_c;
    double wave_t = 0.0;
    auto* wave = app.add_subcommand("wave", "Write the smooth approximate wave at time --t");
    add_common(wave, wave_c);
    wave->add_option("--t", wave_t, "Time")->required();

    Common fan_c;
    double fan_t = 0.0;
    auto* fan = app.add_subcommand("riemann", "Write the exact Riemann fan at time --t");
    add_common(fan, fan_c);
    fan->add_option("--t", fan_t, "Time (> 0)")->required();

    Common map_c;
    MapOptions map_o;
    auto* map = app.add_subcommand("convexity-map", "Tabulate the Hessian of p~(v, s) over a (v, theta) grid");
    add_common(map, map_c);
    map->add_option("--a-list", map_o.a_list, "Radiation constants to tabulate")->required();
    map->add_option("--v-range", map_o.v_range, "Volume range (lo hi)")->expected(2)->capture_default_str();
    map->add_option("--theta-range", map_o.theta_range, "Temperature range (lo hi)")
        ->expected(2)
        ->capture_default_str();
    map->add_option("--n", map_o.n, "Grid points per axis")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "radwave: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    try {
        if (sim->parsed()) {
            return cmd_simulate(sim_c, out, err);
        }
        if (wave->parsed()) {
            return cmd_wave(wave_c, wave_t, out);
        }
        if (fan->parsed()) {
            return cmd_riemann(fan_c, fan_t, out);
        }
        if (map->parsed()) {
            return cmd_convexity(map_c, map_o, out);
        }
    } catch (const BlowUpError& e) {
        err << "radwave: " << e.what() << '\n';
        return kBlowUp;
    } catch (const std::exception& e) {
        err << "radwave: " << e.what() << '\n';
        return kValidation;
    }
    err << "radwave: no command given\n";
    return kUsage;
}

}  // namespace radwave::cli
