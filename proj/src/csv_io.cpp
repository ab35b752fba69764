#include "radwave/csv_io.hpp"

#include "radwave/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace radwave::csv {

namespace {

void append_row(std::string& out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += format_double(v);
    }
    out += '\n';
}

double parse_cell(std::string_view cell, std::size_t line) {
    if (cell == "true") {
        return 1.0;
    }
    if (cell == "false") {
        return 0.0;
    }
    double value = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw DomainError("csv line " + std::to_string(line) + ": not a number: '" + std::string(cell) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string snapshot_csv(const solver::FieldSnapshot& snap, const waves::WaveProfile& profile) {
    const std::size_t n = profile.x.size();
    if (snap.v.size() != n || snap.u.size() != n || snap.theta.size() != n || snap.z.size() != n ||
        profile.V.size() != n || profile.U.size() != n || profile.Theta.size() != n) {
        throw InternalError("snapshot_csv: array lengths differ");
    }
    std::string out(kSnapshotHeader);
    out += '\n';
    for (std::size_t i = 0; i < n; ++i) {
        append_row(out, {profile.x[i], snap.v[i], snap.u[i], snap.theta[i], snap.z[i], profile.V[i], profile.U[i],
                         profile.Theta[i]});
    }
    return out;
}

std::string timeseries_csv(const std::vector<diagnostics::DiagnosticsRecord>& records) {
    std::string out(kTimeseriesHeader);
    out += '\n';
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (i > 0 && !(r.t > records[i - 1].t)) {
            throw InternalError("timeseries_csv: record times must be strictly increasing (row " +
                                std::to_string(i) + ")");
        }
        append_row(out, {r.t, r.sup_v, r.sup_u, r.sup_s, r.sup_z, r.eta_total, r.dissipation, r.h1_perturbation,
                         r.min_v, r.max_v, r.min_theta, r.max_theta, r.min_z, r.max_z, r.reactant_mass});
    }
    return out;
}

std::string convexity_csv(const std::vector<ConvexityRow>& rows) {
    std::string out(kConvexityHeader);
    out += '\n';
    for (const auto& r : rows) {
        for (double v : {r.v, r.theta, r.a, r.det, r.p_vv, r.p_ss}) {
            out += format_double(v);
            out += ',';
        }
        out += r.convex ? "true" : "false";
        out += '\n';
    }
    return out;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError(path.string() + ": cannot open for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) {
        throw IoError(path.string() + ": write failed");
    }
}

void write_snapshot_csv(const solver::FieldSnapshot& snap, const waves::WaveProfile& profile,
                        const std::filesystem::path& path) {
    write_text(path, snapshot_csv(snap, profile));
}

void write_timeseries_csv(const std::vector<diagnostics::DiagnosticsRecord>& records,
                          const std::filesystem::path& path) {
    write_text(path, timeseries_csv(records));
}

std::size_t Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return i;
        }
    }
    throw DomainError("csv: no column named '" + std::string(name) + "'");
}

std::vector<double> Table::values(std::string_view name) const {
    const std::size_t c = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        out.push_back(r[c]);
    }
    return out;
}

Table parse_csv(std::string_view text) {
    Table t;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto cells = split(line);
        if (t.header.empty()) {
            t.header.assign(cells.begin(), cells.end());
            continue;
        }
        if (cells.size() != t.header.size()) {
            throw DomainError("csv line " + std::to_string(line_no) + ": expected " +
                              std::to_string(t.header.size()) + " cells");
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (auto c : cells) {
            row.push_back(parse_cell(c, line_no));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(path.string() + ": cannot open for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str());
}

}  // namespace radwave::csv
