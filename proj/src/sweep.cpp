#include "bisphere/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bisphere/asymptotics.hpp"

namespace bisphere {

namespace fs = std::filesystem;
using nlohmann::json;

void SweepConfig::validate() const {
    if (!(xi_min > 0.0) || !(xi_max > xi_min))
        throw std::invalid_argument("sweep: need 0 < xi_min < xi_max");
    if (points < 2) throw std::invalid_argument("sweep: points must be >= 2");
    if (!(rel_tol > 0.0) || rel_tol > 1e-2)
        throw std::invalid_argument("sweep: rel_tol must lie in (0, 1e-2]");
    for (const FieldConfig& f : fields) f.validate();
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Minimal flat TOML: `key = value` lines, # comments, string values quoted,
// arrays of strings for series_filter.
void apply_kv(SweepConfig* c, const std::string& key, const std::string& raw) {
    auto parse_series_list = [](std::string v) {
        std::vector<SeriesId> ids;
        std::string cur;
        for (char ch : v) {
            if (std::isalnum(static_cast<unsigned char>(ch))) {
                cur += ch;
            } else if (!cur.empty()) {
                ids.push_back(SeriesId::from_key(cur));
                cur.clear();
            }
        }
        if (!cur.empty()) ids.push_back(SeriesId::from_key(cur));
        return ids;
    };
    if (key == "xi_min") c->xi_min = std::stod(raw);
    else if (key == "xi_max") c->xi_max = std::stod(raw);
    else if (key == "points") c->points = std::stoi(raw);
    else if (key == "rel_tol") c->rel_tol = std::stod(raw);
    else if (key == "output_dir") {
        std::string v = trim(raw);
        if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
        c->output_dir = v;
    } else if (key == "series_filter") c->series_filter = parse_series_list(raw);
    else throw std::invalid_argument("sweep config: unknown key " + key);
}

}  // namespace

SweepConfig SweepConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("sweep config: cannot open " + path);
    SweepConfig c;
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        json j = json::parse(in);
        if (j.contains("xi_min")) c.xi_min = j["xi_min"].get<double>();
        if (j.contains("xi_max")) c.xi_max = j["xi_max"].get<double>();
        if (j.contains("points")) c.points = j["points"].get<int>();
        if (j.contains("rel_tol")) c.rel_tol = j["rel_tol"].get<double>();
        if (j.contains("output_dir")) c.output_dir = j["output_dir"].get<std::string>();
        if (j.contains("series_filter"))
            for (const auto& s : j["series_filter"])
                c.series_filter.push_back(SeriesId::from_key(s.get<std::string>()));
    } else {
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("sweep config: malformed line: " + line);
            apply_kv(&c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
    }
    c.validate();
    return c;
}

std::vector<double> sweep_grid(const SweepConfig& config) {
    config.validate();
    std::vector<double> grid;
    grid.reserve(config.points + 2);
    const double la = std::log10(config.xi_min), lb = std::log10(config.xi_max);
    for (int i = 0; i < config.points; ++i)
        grid.push_back(std::pow(10.0, la + (lb - la) * i / (config.points - 1)));
    // table comparison points, appended when not on the grid
    for (double probe : {1e-3, 1e-2}) {
        if (probe < config.xi_min || probe > config.xi_max) continue;
        bool present = false;
        for (double g : grid)
            if (std::abs(g - probe) <= 1e-12 * probe) present = true;
        if (!present) grid.push_back(probe);
    }
    std::sort(grid.begin(), grid.end());
    return grid;
}

std::vector<ErrorRow> run_error_sweep(const SweepConfig& config, const ConstantTable& constants) {
    config.validate();
    const std::vector<double> grid = sweep_grid(config);
    std::vector<SeriesId> ids(config.series_filter);
    if (ids.empty()) ids.assign(SeriesId::all().begin(), SeriesId::all().end());

    std::vector<ErrorRow> rows(ids.size() * grid.size());
    const unsigned nthreads = std::min<unsigned>(
        std::max(1u, std::thread::hardware_concurrency()), static_cast<unsigned>(ids.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t s = t; s < ids.size(); s += nthreads) {
                for (std::size_t g = 0; g < grid.size(); ++g) {
                    ErrorRow& row = rows[s * grid.size() + g];
                    row.series = ids[s];
                    row.xi = grid[g];
                    try {
                        const double eta = eta_from_xi(grid[g]);
                        row.direct = eval_series_direct(ids[s], eta, config.rel_tol).value;
                        row.asymptotic = eval_series_asymptotic(ids[s], eta, constants).value;
                        row.pct_error = 100.0 * std::abs(row.direct - row.asymptotic) /
                                        std::abs(row.direct);
                    } catch (const std::exception& ex) {
                        row.failed = true;
                        row.diagnostic = ex.what();
                    }
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    return rows;  // already sorted by (series order given, xi)
}

std::map<std::string, int> categorize(const std::vector<ErrorRow>& rows) {
    std::map<std::string, int> out;
    for (const ErrorRow& r : rows) {
        if (r.failed || std::abs(r.xi - 1e-2) > 1e-9 * 1e-2) continue;
        const int cat = r.pct_error < 0.1 ? 1 : (r.pct_error <= 0.5 ? 2 : 3);
        out[r.series.key()] = cat;
    }
    if (out.size() != SeriesId::all().size())
        throw std::runtime_error("categorize: rows must cover xi = 1e-2 for all 24 series");
    return out;
}

namespace {

std::string num9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
}

const char* kPlotScript = R"py(#!/usr/bin/env python3
"""Log-log plots of each series with a percentage-error inset panel.

Usage: python3 plot_series.py [series_T0k1.csv ...]   (default: all in cwd)
"""
import csv, glob, sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

files = sys.argv[1:] or sorted(glob.glob("series_*.csv"))
for fname in files:
    xs, direct, asym, pct = [], [], [], []
    with open(fname) as fh:
        for row in csv.DictReader(fh):
            xs.append(float(row["xi"]))
            direct.append(float(row["direct"]))
            asym.append(float(row["asymptotic"]))
            pct.append(float(row["pct_error"]))
    fig, (ax, inset) = plt.subplots(
        2, 1, figsize=(6, 6), height_ratios=[3, 1], sharex=True)
    ax.loglog(xs, [abs(v) for v in direct], "b-", label="series")
    ax.loglog(xs, [abs(v) for v in asym], "r--", label="asymptotic")
    ax.set_ylabel("value")
    ax.legend()
    ax.set_title(fname.replace("series_", "").replace(".csv", ""))
    inset.loglog(xs, pct, "k-")
    inset.set_xlabel("xi")
    inset.set_ylabel("% error")
    fig.tight_layout()
    out = fname.replace(".csv", ".png")
    fig.savefig(out, dpi=120)
    plt.close(fig)
    print("wrote", out)
)py";

}  // namespace

std::vector<std::string> emit_reports(const std::vector<ErrorRow>& rows,
                                      const std::map<std::string, int>& categories,
                                      const ConstantTable& constants, const SweepConfig& config,
                                      const std::string& out) {
    fs::create_directories(out);
    std::vector<std::string> written;
    auto emit = [&](const std::string& name, const std::string& content) {
        write_file(fs::path(out) / name, content);
        written.push_back(name);
    };

    {
        std::string csv = "series,xi,direct,asymptotic,pct_error\n";
        for (const ErrorRow& r : rows) {
            if (r.failed) continue;
            csv += r.series.key() + "," + num9(r.xi) + "," + num9(r.direct) + "," +
                   num9(r.asymptotic) + "," + num9(r.pct_error) + "\n";
        }
        emit("errors.csv", csv);
    }
    {
        std::string csv = "series,category\n";
        for (const auto& [key, cat] : categories) csv += key + "," + std::to_string(cat) + "\n";
        emit("categories.csv", csv);
    }
    {
        std::string csv = "label,computed,paper_value,abs_err,known_anomalous,rational_hint\n";
        for (const auto& [label, e] : constants.entries()) {
            csv += label + "," + num9(e.computed) + ",";
            csv += e.paper_value ? num9(*e.paper_value) : "";
            csv += "," + num9(e.abs_err) + ",";
            csv += e.known_anomalous ? "1" : "0";
            csv += ",";
            if (e.rational_hint)
                csv += std::to_string(e.rational_hint->first) + "/" +
                       std::to_string(e.rational_hint->second);
            csv += "\n";
        }
        emit("constants.csv", csv);
    }
    // per-series plot data
    for (const SeriesId& id : SeriesId::all()) {
        std::string csv = "xi,direct,asymptotic,pct_error\n";
        bool any = false;
        for (const ErrorRow& r : rows) {
            if (r.failed || !(r.series == id)) continue;
            any = true;
            csv += num9(r.xi) + "," + num9(r.direct) + "," + num9(r.asymptotic) + "," +
                   num9(r.pct_error) + "\n";
        }
        if (any) emit("series_" + id.key() + ".csv", csv);
    }
    emit("plot_series.py", kPlotScript);

    // force sweep: alpha = 1, theta = pi/4, beta in {0.1, 1, 10} unless the
    // config provides explicit field points
    {
        std::vector<FieldConfig> fields = config.fields;
        if (fields.empty())
            for (double b : {0.1, 1.0, 10.0}) fields.push_back(FieldConfig{1.0, b, M_PI / 4.0});
        const std::vector<double> grid = sweep_grid(config);
        SeriesCache cache;
        const RecipeSet& recipes = RecipeSet::builtin();
        std::string csv = "alpha,beta,theta,xi,fz_direct,fx_direct,fz_asymptotic,fx_asymptotic\n";
        for (const FieldConfig& f : fields) {
            for (double xi : grid) {
                const auto geo = NearContactGeometry::from_xi(xi);
                const ForceResult d =
                    force_components(geo, f, Method::Direct, recipes, constants, &cache,
                                     config.rel_tol);
                const ForceResult a =
                    force_components(geo, f, Method::Asymptotic, recipes, constants, &cache,
                                     config.rel_tol);
                csv += num9(f.alpha) + "," + num9(f.beta) + "," + num9(f.theta) + "," + num9(xi) +
                       "," + num9(d.fz) + "," + num9(d.fx) + "," + num9(a.fz) + "," + num9(a.fx) +
                       "\n";
            }
        }
        emit("forces.csv", csv);
    }
    return written;
}

}  // namespace bisphere
