#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bisphere/sweep.hpp"
#include "reference_gen.hpp"

using namespace bisphere;
namespace fs = std::filesystem;

namespace {
const ConstantTable& table() {
    static const ConstantTable t = ConstantTable::paper_defaults();
    return t;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("sweep grid: log-spaced, endpoints and probe points included") {
    SweepConfig c;
    c.points = 10;
    const auto grid = sweep_grid(c);
    CHECK(grid.front() == doctest::Approx(1e-6));
    CHECK(grid.back() == doctest::Approx(1e-2));
    int probes = 0;
    for (double g : grid)
        if (std::abs(g - 1e-3) < 1e-15 || std::abs(g - 1e-2) < 1e-15) ++probes;
    CHECK(probes == 2);
    CHECK(std::is_sorted(grid.begin(), grid.end()));
}

TEST_CASE("sweep config validation and file loading") {
    CHECK_THROWS_AS((SweepConfig{1e-2, 1e-3}).validate(), std::invalid_argument);
    SweepConfig bad;
    bad.points = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    const fs::path toml = fs::temp_directory_path() / "bisphere_sweep_test.toml";
    {
        std::ofstream out(toml);
        out << "# sweep settings\n"
               "xi_min = 1e-5\n"
               "xi_max = 1e-3\n"
               "points = 7\n"
               "rel_tol = 1e-9\n"
               "series_filter = [\"T0k1\", \"U2k3\"]\n"
               "output_dir = \"out\"\n";
    }
    const SweepConfig c = SweepConfig::load_file(toml.string());
    CHECK(c.xi_min == 1e-5);
    CHECK(c.points == 7);
    CHECK(c.series_filter.size() == 2);
    CHECK(c.series_filter[1].key() == "U2k3");
    CHECK(c.output_dir == "out");

    const fs::path json = fs::temp_directory_path() / "bisphere_sweep_test.json";
    {
        std::ofstream out(json);
        out << R"({"xi_min": 2e-6, "points": 5, "series_filter": ["U0k2"]})";
    }
    const SweepConfig cj = SweepConfig::load_file(json.string());
    CHECK(cj.xi_min == 2e-6);
    CHECK(cj.series_filter.size() == 1);

    CHECK_THROWS_AS(SweepConfig::load_file("/nonexistent/sweep.toml"), std::runtime_error);
    const fs::path badtoml = fs::temp_directory_path() / "bisphere_sweep_bad.toml";
    {
        std::ofstream out(badtoml);
        out << "mystery_key = 3\n";
    }
    CHECK_THROWS_AS(SweepConfig::load_file(badtoml.string()), std::invalid_argument);
}

TEST_CASE("run_error_sweep: row layout and error magnitudes") {
    SweepConfig c;
    c.points = 4;
    c.series_filter = {SeriesId::from_key("T0k1"), SeriesId::from_key("U0k2")};
    c.rel_tol = 1e-11;
    const auto rows = run_error_sweep(c, table());
    const auto grid = sweep_grid(c);
    CHECK(rows.size() == 2 * grid.size());
    for (const auto& r : rows) {
        CHECK_FALSE(r.failed);
        CHECK(r.pct_error >= 0.0);
    }
    // pct error grows with separation over [1e-4, 1e-2]
    for (std::size_t s = 0; s < 2; ++s) {
        double prev = -1.0;
        for (std::size_t g = 0; g < grid.size(); ++g) {
            const auto& r = rows[s * grid.size() + g];
            if (r.xi >= 1e-4) {
                CHECK(r.pct_error >= prev - 1e-5);
                prev = r.pct_error;
            }
        }
    }
}

TEST_CASE("sweep percentage errors match an independent high-precision evaluation") {
    SweepConfig c;
    c.points = 2;  // grid {1e-6, 1e-2} + appended 1e-3
    c.rel_tol = 1e-12;
    const auto rows = run_error_sweep(c, table());
    auto pct_at = [&](const std::string& key, double xi) {
        for (const auto& r : rows)
            if (r.series.key() == key && std::abs(r.xi - xi) < 1e-12 * xi) return r.pct_error;
        FAIL("missing row");
        return 0.0;
    };
    for (const auto& ref : refdata::kPctReference) {
        const double p3 = pct_at(ref.id, 1e-3);
        const double p2 = pct_at(ref.id, 1e-2);
        CHECK_MESSAGE(std::abs(p3 - ref.at_1e3) <= 1e-9 + 1e-6 * ref.at_1e3,
                      ref.id << "@1e-3: " << p3 << " vs " << ref.at_1e3);
        CHECK_MESSAGE(std::abs(p2 - ref.at_1e2) <= 1e-9 + 1e-6 * ref.at_1e2,
                      ref.id << "@1e-2: " << p2 << " vs " << ref.at_1e2);
    }
}

TEST_CASE("categorize reproduces the published three-way grouping") {
    SweepConfig c;
    c.points = 2;  // grid {1e-6, 1e-2} + appended 1e-3
    const auto rows = run_error_sweep(c, table());
    const auto cats = categorize(rows);
    REQUIRE(cats.size() == 24);
    CHECK(cats.at("T0k1") == 1);
    CHECK(cats.at("U1k1") == 2);
    CHECK(cats.at("U0k3") == 3);

    SUBCASE("incomplete input is rejected") {
        SweepConfig part = c;
        part.series_filter = {SeriesId::from_key("T0k1")};
        CHECK_THROWS_AS(categorize(run_error_sweep(part, table())), std::runtime_error);
    }
}

TEST_CASE("emit_reports: deterministic byte-identical artifact set") {
    SweepConfig c;
    c.points = 3;
    c.rel_tol = 1e-9;
    const auto rows = run_error_sweep(c, table());
    const auto cats = categorize(rows);

    const fs::path base = fs::temp_directory_path() / "bisphere_report_test";
    fs::remove_all(base);
    const auto files1 = emit_reports(rows, cats, table(), c, (base / "a").string());
    const auto files2 = emit_reports(rows, cats, table(), c, (base / "b").string());
    CHECK(files1 == files2);
    // 24 per-series files + errors/categories/constants/forces csv + plot script
    CHECK(files1.size() == 24 + 5);
    for (const auto& name : files1) {
        CHECK(slurp(base / "a" / name) == slurp(base / "b" / name));
    }

    const std::string errors = slurp(base / "a" / "errors.csv");
    std::size_t lines = std::count(errors.begin(), errors.end(), '\n');
    CHECK(lines == 1 + rows.size());  // header + 24 series x grid

    const std::string forces = slurp(base / "a" / "forces.csv");
    lines = std::count(forces.begin(), forces.end(), '\n');
    CHECK(lines == 1 + 3 * sweep_grid(c).size());  // 3 beta values x points
    fs::remove_all(base);
}
