// bisphere: near-contact electrostatics of two equal charged conducting
// spheres in a uniform external field.  Subcommands: constants, series,
// sweep, forces, report.
//
// Exit codes: 0 success, 1 runtime error, 2 validation failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bisphere/asymptotics.hpp"
#include "bisphere/forces.hpp"
#include "bisphere/geometry.hpp"
#include "bisphere/quadrature.hpp"
#include "bisphere/series.hpp"
#include "bisphere/sweep.hpp"

#include "../src/tables.hpp"

using namespace bisphere;
using nlohmann::json;

namespace {

int cmd_constants(double abs_tol, const std::string& out_path) {
    const ConstantTable table = build_constant_table(abs_tol);
    int unexpected = 0, known = 0, checked = 0;
    json dump = json::array();
    for (const auto& [label, e] : table.entries()) {
        json row{{"label", label},
                 {"computed", e.computed},
                 {"abs_err", e.abs_err},
                 {"aggregate", e.aggregate},
                 {"known_anomalous", e.known_anomalous}};
        if (e.paper_value) row["paper_value"] = *e.paper_value;
        if (e.rational_hint)
            row["rational_hint"] =
                std::to_string(e.rational_hint->first) + "/" + std::to_string(e.rational_hint->second);
        dump.push_back(row);
        ++checked;
        if (e.anomalous) {
            if (e.known_anomalous) {
                ++known;
            } else {
                ++unexpected;
                std::printf("UNEXPECTED %-7s computed=% .9g paper=% .9g |diff|=%.3g\n",
                            label.c_str(), e.computed, *e.paper_value, e.abs_err);
            }
        }
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << dump.dump(1) << "\n";
    }
    std::printf("constants: %d entries, %d within print tolerance, %d documented anomalies, "
                "%d unexpected\n",
                checked, checked - known - unexpected, known, unexpected);
    return unexpected == 0 ? 0 : 2;
}

int cmd_series(const std::string& id_key, double xi, const std::string& method,
               const std::string& eta_map, double rel_tol) {
    const SeriesId id = SeriesId::from_key(id_key);
    const EtaMap map = eta_map == "arccosh" ? EtaMap::ExactArccosh : EtaMap::SqrtApprox;
    const double eta = eta_from_xi(xi, map);
    std::printf("series %s  xi=%g  eta1=%.12g\n", id.name().c_str(), xi, eta);
    EvalReport direct, asym;
    const ConstantTable table = ConstantTable::paper_defaults();
    if (method == "direct" || method == "both") {
        direct = eval_series_direct(id, eta, rel_tol);
        std::printf("  direct      %.12e  terms=%llu  tail_bound=%.3e\n", direct.value,
                    static_cast<unsigned long long>(direct.terms_used), direct.tail_bound);
    }
    if (method == "asym" || method == "both") {
        asym = eval_series_asymptotic(id, eta, table);
        std::printf("  asymptotic  %.12e%s\n", asym.value,
                    asym.within_validity ? "" : "  [outside validity window eta1 <= 0.2]");
    }
    if (method == "both")
        std::printf("  pct_error   %.6g\n", 100.0 * std::abs(direct.value - asym.value) /
                                                std::abs(direct.value));
    return 0;
}

int cmd_forces(double alpha, double beta, double theta, double xi, const std::string& method,
               const std::string& recipes_path, double rel_tol) {
    const RecipeSet recipes =
        recipes_path.empty() ? RecipeSet::builtin() : RecipeSet::load_file(recipes_path);
    const ConstantTable table = ConstantTable::paper_defaults();
    const auto geo = NearContactGeometry::from_xi(xi);
    const FieldConfig field{alpha, beta, theta};
    SeriesCache cache;
    auto run = [&](Method m, const char* name) {
        const ForceResult r = force_components(geo, field, m, recipes, table, &cache, rel_tol);
        std::printf("%-11s fz=% .10e  fx=% .10e\n", name, r.fz, r.fx);
        std::printf("            F1..F10:");
        for (double f : r.coefficients) std::printf(" % .6e", f);
        std::printf("\n");
    };
    if (method == "direct" || method == "both") run(Method::Direct, "direct");
    if (method == "asym" || method == "both") run(Method::Asymptotic, "asymptotic");
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_override) {
    SweepConfig config =
        config_path.empty() ? SweepConfig{} : SweepConfig::load_file(config_path);
    if (!out_override.empty()) config.output_dir = out_override;
    const ConstantTable table = build_constant_table();
    const auto rows = run_error_sweep(config, table);
    for (const ErrorRow& r : rows)
        if (r.failed)
            std::fprintf(stderr, "row %s xi=%g failed: %s\n", r.series.key().c_str(), r.xi,
                         r.diagnostic.c_str());
    // the three-way classification needs the xi = 1e-2 column and all series
    const bool classifiable = config.series_filter.empty() && config.xi_min <= 1e-2 &&
                              config.xi_max >= 1e-2;
    const auto cats = classifiable ? categorize(rows) : std::map<std::string, int>{};
    const auto files = emit_reports(rows, cats, table, config, config.output_dir);
    std::printf("sweep: %zu rows -> %s (%zu files)\n", rows.size(), config.output_dir.c_str(),
                files.size());
    if (!classifiable) return 0;

    // category check against the published grouping
    std::size_t npct;
    const detail::PctRow* pct = detail::pct_table(&npct);
    int mismatches = 0;
    for (std::size_t i = 0; i < npct; ++i) {
        const auto it = cats.find(pct[i].id);
        if (it == cats.end() || it->second != pct[i].category) {
            ++mismatches;
            std::printf("category mismatch for %s: got %d want %d\n", pct[i].id,
                        it == cats.end() ? -1 : it->second, pct[i].category);
        }
    }
    std::printf("categories: %zu/%zu match the published grouping\n", npct - mismatches, npct);
    return mismatches == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"near-contact electrostatic force between two equal charged conducting "
                 "spheres in a uniform field"};
    app.require_subcommand(1);

    auto* c_const = app.add_subcommand("constants", "evaluate and validate the constant table");
    double abs_tol = 1e-9;
    std::string const_out;
    c_const->add_option("--abs-tol", abs_tol, "quadrature absolute tolerance")
        ->check(CLI::Range(1e-12, 1e-6));
    c_const->add_option("--out", const_out, "write constants.json here");

    auto* c_series = app.add_subcommand("series", "evaluate one series");
    std::string id_key = "T0k1", method = "both", eta_map = "sqrt";
    double xi = 1e-4, rel_tol = 1e-10;
    c_series->add_option("--id", id_key, "series id, e.g. T0k1, U2k3")->required();
    c_series->add_option("--xi", xi, "separation")->required();
    c_series->add_option("--method", method)->check(CLI::IsMember({"direct", "asym", "both"}));
    c_series->add_option("--eta-map", eta_map)->check(CLI::IsMember({"sqrt", "arccosh"}));
    c_series->add_option("--rel-tol", rel_tol);

    auto* c_sweep = app.add_subcommand("sweep", "percentage-error sweep over xi");
    std::string sweep_config, sweep_out;
    c_sweep->add_option("--config", sweep_config, "sweep.toml or sweep.json");
    c_sweep->add_option("--out", sweep_out, "output directory override");

    auto* c_forces = app.add_subcommand("forces", "force components on sphere 2");
    double alpha = 1.0, beta = 1.0, theta = 0.0, fxi = 1e-4, frel = 1e-12;
    std::string fmethod = "both", recipes_path;
    c_forces->add_option("--alpha", alpha, "charge ratio q1/q2");
    c_forces->add_option("--beta", beta, "field-strength ratio");
    c_forces->add_option("--theta", theta, "field angle (radians)");
    c_forces->add_option("--xi", fxi, "separation")->required();
    c_forces->add_option("--method", fmethod)->check(CLI::IsMember({"direct", "asym", "both"}));
    c_forces->add_option("--recipes", recipes_path, "coefficient transcription file");
    c_forces->add_option("--rel-tol", frel);

    auto* c_report = app.add_subcommand("report", "full artifact set (sweep + constants + forces)");
    std::string report_out = "report", report_config;
    c_report->add_option("--out", report_out, "output directory")->required();
    c_report->add_option("--config", report_config, "sweep config file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_const) return cmd_constants(abs_tol, const_out);
        if (*c_series) return cmd_series(id_key, xi, method, eta_map, rel_tol);
        if (*c_sweep) return cmd_sweep(sweep_config, sweep_out);
        if (*c_forces) return cmd_forces(alpha, beta, theta, fxi, fmethod, recipes_path, frel);
        if (*c_report) return cmd_sweep(report_config, report_out);
    } catch (const std::invalid_argument& ex) {
        std::fprintf(stderr, "validation error: %s\n", ex.what());
        return 2;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 1;
    }
    return 0;
}
