#include "radwave/config.hpp"

#include "radwave/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace radwave::config {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Typed access to one JSON object that records problems instead of throwing.
class Reader {
public:
    Reader(const json& obj, std::string path, std::vector<std::string>& errors,
           std::initializer_list<const char*> allowed)
        : obj_(obj), path_(std::move(path)), errors_(errors) {
        if (!obj_.is_object()) {
            fail(path_, "expected an object");
            ok_ = false;
            return;
        }
        const std::set<std::string> keys(allowed.begin(), allowed.end());
        for (const auto& item : obj_.items()) {
            if (!keys.contains(item.key())) {
                fail(at(item.key()), "unknown key");
            }
        }
    }

    bool ok() const { return ok_; }
    const std::string& path() const { return path_; }

    std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    void fail(const std::string& where, const std::string& what) { errors_.push_back(where + ": " + what); }

    bool has(const char* key) const { return ok_ && obj_.contains(key); }

    std::optional<double> number(const char* key, bool required = false) {
        if (!has(key)) {
            if (required && ok_) {
                fail(at(key), "required number is missing");
            }
            return std::nullopt;
        }
        const auto& v = obj_.at(key);
        if (!v.is_number()) {
            fail(at(key), "expected a number");
            return std::nullopt;
        }
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            fail(at(key), "must be finite");
            return std::nullopt;
        }
        return d;
    }

    std::optional<std::string> string(const char* key, bool required = false) {
        if (!has(key)) {
            if (required && ok_) {
                fail(at(key), "required string is missing");
            }
            return std::nullopt;
        }
        const auto& v = obj_.at(key);
        if (!v.is_string()) {
            fail(at(key), "expected a string");
            return std::nullopt;
        }
        return v.get<std::string>();
    }

    const json* child(const char* key) const { return has(key) ? &obj_.at(key) : nullptr; }

private:
    const json& obj_;
    std::string path_;
    std::vector<std::string>& errors_;
    bool ok_ = true;
};

void check(bool good, Reader& r, const char* key, const char* what) {
    if (!good) {
        r.fail(r.at(key), what);
    }
}

void read_positive(Reader& r, const char* key, double& target) {
    if (auto v = r.number(key)) {
        check(*v > 0.0, r, key, "must be > 0");
        target = *v;
    }
}

void read_nonnegative(Reader& r, const char* key, double& target) {
    if (auto v = r.number(key)) {
        check(*v >= 0.0, r, key, "must be >= 0");
        target = *v;
    }
}

void read_gas(const json& j, thermo::GasParams& gp, std::vector<std::string>& errors) {
    Reader r(j, "gas", errors,
             {"R", "Cv", "a", "mu", "kappa1", "kappa2", "b", "d", "lambda_heat", "K", "A", "beta"});
    read_positive(r, "R", gp.R);
    gp.Cv = 1.5 * gp.R;
    read_positive(r, "Cv", gp.Cv);
    read_nonnegative(r, "a", gp.a);
    read_positive(r, "mu", gp.mu);
    read_positive(r, "kappa1", gp.kappa1);
    read_positive(r, "kappa2", gp.kappa2);
    read_positive(r, "b", gp.b);
    read_positive(r, "d", gp.d);
    read_nonnegative(r, "lambda_heat", gp.lambda_heat);
    read_nonnegative(r, "K", gp.K);
    read_nonnegative(r, "A", gp.A);
    read_nonnegative(r, "beta", gp.beta);
}

bool read_riemann(const json& j, RiemannConfig& rc, std::vector<std::string>& errors) {
    const auto before = errors.size();
    Reader r(j, "riemann", errors,
             {"v_minus", "u_minus", "theta_minus", "v_plus", "u_plus", "theta_plus", "entropy_tol"});
    if (auto v = r.number("v_minus", true)) {
        check(*v > 0.0, r, "v_minus", "must be > 0");
        rc.v_minus = *v;
    }
    if (auto v = r.number("u_minus", true)) {
        rc.u_minus = *v;
    }
    if (auto v = r.number("theta_minus", true)) {
        check(*v > 0.0, r, "theta_minus", "must be > 0");
        rc.theta_minus = *v;
    }
    if (auto v = r.number("v_plus", true)) {
        check(*v > 0.0, r, "v_plus", "must be > 0");
        rc.v_plus = *v;
    }
    if (auto v = r.number("u_plus", true)) {
        rc.u_plus = *v;
    }
    if (auto v = r.number("theta_plus")) {
        check(*v > 0.0, r, "theta_plus", "must be > 0");
        rc.theta_plus = *v;
    }
    read_positive(r, "entropy_tol", rc.entropy_tol);
    return errors.size() == before;
}

void read_wave(const json& j, waves::WaveOptions& w, std::vector<std::string>& errors) {
    Reader r(j, "wave", errors, {"eps", "q"});
    if (auto v = r.number("eps")) {
        check(*v > 0.0, r, "eps", "must be > 0");
        w.eps = *v;
    }
    if (auto v = r.number("q")) {
        check(*v > 1.5, r, "q", "must be > 1.5");
        w.q = *v;
    }
}

bool read_grid(const json& j, GridConfig& g, std::vector<std::string>& errors) {
    const auto before = errors.size();
    Reader r(j, "grid", errors, {"L", "n"});
    read_positive(r, "L", g.L);
    if (const json* n = r.child("n")) {
        if (!n->is_number_integer()) {
            r.fail(r.at("n"), "expected an integer");
        } else {
            const auto value = n->get<long long>();
            check(value >= 16 && value <= 100000000, r, "n", "must be an integer >= 16");
            g.n = static_cast<int>(std::clamp<long long>(value, 0, 100000000));
        }
    }
    return errors.size() == before;
}

void read_time(const json& j, TimeConfig& t, std::vector<std::string>& errors) {
    Reader r(j, "time", errors, {"t_end", "cfl", "output_interval", "snapshot_times"});
    read_nonnegative(r, "t_end", t.t_end);
    if (auto v = r.number("cfl")) {
        check(*v > 0.0 && *v <= 1.0, r, "cfl", "must lie in (0, 1]");
        t.cfl = *v;
    }
    read_positive(r, "output_interval", t.output_interval);
    if (const json* s = r.child("snapshot_times")) {
        if (!s->is_array()) {
            r.fail(r.at("snapshot_times"), "expected an array of numbers");
        } else {
            for (std::size_t i = 0; i < s->size(); ++i) {
                const auto& e = (*s)[i];
                const std::string where = r.at("snapshot_times") + "[" + std::to_string(i) + "]";
                if (!e.is_number()) {
                    r.fail(where, "expected a number");
                    continue;
                }
                const double v = e.get<double>();
                if (!(v >= 0.0 && v <= t.t_end)) {
                    r.fail(where, "must lie in [0, time.t_end]");
                }
                t.snapshot_times.push_back(v);
            }
        }
    }
}

void read_perturbations(const json& j, std::vector<solver::Perturbation>& out, std::optional<double> L,
                        std::vector<std::string>& errors) {
    if (!j.is_array()) {
        errors.push_back("perturbation: expected an array");
        return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto before = errors.size();
        Reader r(j[i], "perturbation[" + std::to_string(i) + "]", errors,
                 {"field", "shape", "amplitude", "center", "width"});
        solver::Perturbation p;
        if (auto f = r.string("field", true)) {
            if (*f == "v") {
                p.field = solver::Field::V;
            } else if (*f == "u") {
                p.field = solver::Field::U;
            } else if (*f == "theta") {
                p.field = solver::Field::Theta;
            } else if (*f == "z") {
                p.field = solver::Field::Z;
            } else {
                r.fail(r.at("field"), "must be one of v, u, theta, z");
            }
        }
        if (auto s = r.string("shape", true)) {
            if (*s == "gaussian") {
                p.shape = solver::Shape::Gaussian;
            } else if (*s == "bump") {
                p.shape = solver::Shape::Bump;
            } else {
                r.fail(r.at("shape"), "must be gaussian or bump");
            }
        }
        if (auto v = r.number("amplitude", true)) {
            p.amplitude = *v;
        }
        if (auto v = r.number("center")) {
            p.center = *v;
        }
        if (auto v = r.number("width", true)) {
            check(*v > 0.0, r, "width", "must be > 0");
            p.width = *v;
        }
        if (errors.size() == before && L) {
            if (std::abs(p(-*L)) >= 1e-8 || std::abs(p(*L)) >= 1e-8) {
                r.fail(r.path(), "does not decay below 1e-8 at the domain edges");
            }
        }
        out.push_back(p);
    }
}

const char* field_name(solver::Field f) {
    switch (f) {
        case solver::Field::V: return "v";
        case solver::Field::U: return "u";
        case solver::Field::Theta: return "theta";
        case solver::Field::Z: return "z";
    }
    return "v";
}

const char* shape_name(solver::Shape s) {
    return s == solver::Shape::Gaussian ? "gaussian" : "bump";
}

}  // namespace

solver::RunSettings ScenarioConfig::run_settings() const {
    solver::RunSettings s;
    s.t_end = time.t_end;
    s.cfl = time.cfl;
    s.output_interval = time.output_interval;
    s.snapshot_times = time.snapshot_times;
    return s;
}

ScenarioConfig parse_config(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("malformed JSON: ") + e.what()});
    }

    std::vector<std::string> errors;
    ScenarioConfig cfg;
    Reader top(root, "", errors, {"label", "seed", "gas", "riemann", "wave", "grid", "time", "perturbation"});
    if (!top.ok()) {
        throw ConfigError(std::move(errors));
    }
    if (auto s = top.string("label")) {
        cfg.label = *s;
    }
    if (const json* seed = top.child("seed")) {
        if (!seed->is_number_unsigned()) {
            top.fail("seed", "expected a nonnegative integer");
        } else {
            cfg.seed = seed->get<std::uint64_t>();
        }
    }

    const auto gas_before = errors.size();
    if (const json* g = top.child("gas")) {
        read_gas(*g, cfg.gas, errors);
    } else {
        cfg.gas = thermo::GasParams::radiative();
    }
    const bool gas_ok = errors.size() == gas_before;

    bool riemann_ok = false;
    if (const json* r = top.child("riemann")) {
        riemann_ok = read_riemann(*r, cfg.riemann, errors);
    } else {
        errors.push_back("riemann: required block is missing");
    }
    if (const json* w = top.child("wave")) {
        read_wave(*w, cfg.wave, errors);
    }
    bool grid_ok = true;
    if (const json* g = top.child("grid")) {
        grid_ok = read_grid(*g, cfg.grid, errors);
    }
    if (const json* t = top.child("time")) {
        read_time(*t, cfg.time, errors);
    }
    if (const json* p = top.child("perturbation")) {
        read_perturbations(*p, cfg.perturbations, grid_ok ? std::optional<double>(cfg.grid.L) : std::nullopt,
                           errors);
    }

    if (gas_ok && riemann_ok) {
        try {
            (void)riemann_data(cfg);
        } catch (const DomainError& e) {
            errors.push_back(std::string("riemann: ") + e.what());
        } catch (const RarefactionConfigError& e) {
            errors.push_back(std::string("riemann: ") + e.what());
        } catch (const ConvergenceError& e) {
            errors.push_back(std::string("riemann: ") + e.what());
        }
    }

    if (!errors.empty()) {
        throw ConfigError(std::move(errors));
    }
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError({path.string() + ": cannot open configuration file"});
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string dump_config(const ScenarioConfig& cfg) {
    ordered_json j;
    j["label"] = cfg.label;
    j["seed"] = cfg.seed;
    const auto& g = cfg.gas;
    j["gas"] = {{"R", g.R},           {"Cv", g.Cv}, {"a", g.a},         {"mu", g.mu},
                {"kappa1", g.kappa1}, {"kappa2", g.kappa2}, {"b", g.b}, {"d", g.d},
                {"lambda_heat", g.lambda_heat}, {"K", g.K}, {"A", g.A}, {"beta", g.beta}};
    const auto& r = cfg.riemann;
    ordered_json rj = {{"v_minus", r.v_minus}, {"u_minus", r.u_minus}, {"theta_minus", r.theta_minus},
                       {"v_plus", r.v_plus},   {"u_plus", r.u_plus}};
    if (r.theta_plus) {
        rj["theta_plus"] = *r.theta_plus;
    }
    rj["entropy_tol"] = r.entropy_tol;
    j["riemann"] = rj;
    ordered_json wj = ordered_json::object();
    if (cfg.wave.eps) {
        wj["eps"] = *cfg.wave.eps;
    }
    wj["q"] = cfg.wave.q;
    j["wave"] = wj;
    j["grid"] = {{"L", cfg.grid.L}, {"n", cfg.grid.n}};
    j["time"] = {{"t_end", cfg.time.t_end},
                 {"cfl", cfg.time.cfl},
                 {"output_interval", cfg.time.output_interval},
                 {"snapshot_times", cfg.time.snapshot_times}};
    ordered_json pj = ordered_json::array();
    for (const auto& p : cfg.perturbations) {
        pj.push_back({{"field", field_name(p.field)},
                      {"shape", shape_name(p.shape)},
                      {"amplitude", p.amplitude},
                      {"center", p.center},
                      {"width", p.width}});
    }
    j["perturbation"] = pj;
    return j.dump(2) + "\n";
}

waves::RiemannData riemann_data(const ScenarioConfig& cfg) {
    const auto& r = cfg.riemann;
    const auto& gp = cfg.gas;
    double theta_plus = 0.0;
    if (r.theta_plus) {
        theta_plus = *r.theta_plus;
    } else {
        const double s_minus = thermo::entropy(gp, {r.v_minus, r.theta_minus});
        theta_plus = thermo::temperature_from_entropy(gp, {r.v_plus, s_minus});
    }
    return waves::RiemannData::make(gp, {r.v_minus, r.u_minus, r.theta_minus}, {r.v_plus, r.u_plus, theta_plus},
                                    r.entropy_tol);
}

}  // namespace radwave::config
