#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bisphere/forces.hpp"
#include "bisphere/geometry.hpp"
#include "bisphere/quadrature.hpp"
#include "bisphere/series_id.hpp"

namespace bisphere {

struct SweepConfig {
    double xi_min = 1e-6;
    double xi_max = 1e-2;
    int points = 100;  // log-spaced, endpoints included
    std::vector<SeriesId> series_filter;  // empty = all 24
    std::vector<FieldConfig> fields;      // for forces.csv; empty = default set
    std::string output_dir = "report";
    double rel_tol = 1e-10;

    void validate() const;
    // Reads a flat TOML (key = value) or JSON file mirroring these fields.
    static SweepConfig load_file(const std::string& path);
};

struct ErrorRow {
    SeriesId series;
    double xi = 0.0;
    double direct = 0.0;
    double asymptotic = 0.0;
    double pct_error = 0.0;  // 100 |direct - asymptotic| / |direct|
    bool failed = false;     // evaluation failed; row kept with diagnostic
    std::string diagnostic;
};

// Log grid over [xi_min, xi_max]; the table comparison points 1e-3 and 1e-2
// are appended when inside the range but absent from the grid.
std::vector<double> sweep_grid(const SweepConfig& config);

// Both-method evaluation over the grid; rows sorted by (series, xi).
std::vector<ErrorRow> run_error_sweep(const SweepConfig& config, const ConstantTable& constants);

// Paper-style three-way classification from the pct error at xi = 1e-2:
// category 1 (< 0.1), 2 (0.1..0.5), 3 (> 0.5).
std::map<std::string, int> categorize(const std::vector<ErrorRow>& rows);

// Writes errors.csv, categories.csv, constants.csv, per-series plot data,
// plot_series.py and forces.csv into `out`.  Returns the file names written.
std::vector<std::string> emit_reports(const std::vector<ErrorRow>& rows,
                                      const std::map<std::string, int>& categories,
                                      const ConstantTable& constants, const SweepConfig& config,
                                      const std::string& out);

}  // namespace bisphere
