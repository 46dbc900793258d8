#include <doctest.h>

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "bisphere/quadrature.hpp"
#include "reference_gen.hpp"

using namespace bisphere;

TEST_CASE("kernels: frozen values at m = 1") {
    for (const auto& ref : refdata::kKernelAtOne) {
        CHECK_MESSAGE(kernel_value(ref.name, 1.0) ==
                          doctest::Approx(ref.at_one).epsilon(1e-13),
                      ref.name);
    }
}

TEST_CASE("subtracted integrand: branch agreement at the switch point") {
    const double s = maclaurin_switch_point();
    for (const std::string& label : registered_constant_labels()) {
        const double below = subtracted_integrand(label, std::nextafter(s, 0.0));
        const double above = subtracted_integrand(label, std::nextafter(s, 1.0));
        CHECK_MESSAGE(std::abs(above - below) <= 1e-12, label << ": " << below << " vs " << above);
    }
}

TEST_CASE("eval_constant: published examples") {
    CHECK(eval_constant("C_11", 1e-10) == doctest::Approx(-0.0620776).epsilon(2e-5));
    CHECK(eval_constant("C_13", 1e-10) == doctest::Approx(0.0208333).epsilon(2e-5));
    CHECK(eval_constant("C_121", 1e-10) == doctest::Approx(3.09972).epsilon(2e-5));
    CHECK(eval_constant("K_11", 1e-10) == doctest::Approx(-1.0 / 24.0).epsilon(1e-7));
    CHECK(eval_constant("K_131", 1e-10) == doctest::Approx(-0.0416667).epsilon(1e-4));
    CHECK(eval_constant("K_132", 1e-10) == doctest::Approx(0.0416667).epsilon(1e-4));
    CHECK_THROWS_AS(eval_constant("C_999"), std::out_of_range);
    CHECK_THROWS_AS(eval_constant("C_11", 1.0), std::invalid_argument);
}

TEST_CASE("eval_constant: tolerance scaling") {
    for (const char* label : {"C_11", "C_37", "C_121", "C_158", "C_226", "C_93"}) {
        const double coarse = eval_constant(label, 1e-8);
        const double fine = eval_constant(label, 5e-9);
        CHECK(std::abs(fine - coarse) <= 1e-8);
    }
}

TEST_CASE("build_constant_table: registry coverage and flags") {
    const ConstantTable table = build_constant_table(1e-9);
    CHECK(registered_constant_labels().size() == 147);
    CHECK(registered_aggregate_labels().size() == 63);
    CHECK(table.size() == 210);

    int unexpected = 0;
    for (const auto& [label, e] : table.entries()) {
        REQUIRE(e.paper_value.has_value());
        if (e.anomalous && !e.known_anomalous) {
            ++unexpected;
            MESSAGE("unexpected anomaly: " << label << " computed " << e.computed << " vs "
                                           << *e.paper_value);
        }
        // documented anomalies must really be out of print tolerance
        if (e.known_anomalous) CHECK(e.anomalous);
    }
    CHECK(unexpected == 0);

    SUBCASE("aggregate identity is exact") {
        for (const std::string& k : registered_aggregate_labels()) {
            CHECK(table.at(k).aggregate);
        }
        // spot-check K = C + C against independently evaluated parts
        const double k11 = table.at("K_11").computed;
        const double c11 = table.at("C_11").computed;
        const double c12 = table.at("C_12").computed;
        CHECK(std::abs(k11 - (c11 + c12)) <= 1e-12 * std::max(1.0, std::abs(k11)));
    }

    SUBCASE("suspicious-value audit finds the simple rationals") {
        CHECK(table.at("K_11").rational_hint.has_value());
        CHECK(table.at("K_11").rational_hint->first == -1);
        CHECK(table.at("K_11").rational_hint->second == 24);
        CHECK(table.at("C_13").rational_hint.has_value());  // 1/48
    }

    SUBCASE("published values resolve ahead of computed ones") {
        CHECK(table.resolve("K_11") == -0.0416667);
        CHECK(table.resolve("C_173") == -0.159166);  // documented anomaly: computed is -1/3
        CHECK(table.at("C_173").computed == doctest::Approx(-1.0 / 3.0).epsilon(1e-7));
    }
}

TEST_CASE("paper_defaults covers everything without quadrature") {
    const ConstantTable t = ConstantTable::paper_defaults();
    CHECK(t.size() == 210);
    CHECK(t.resolve("K_31") == -0.15905);
    CHECK(std::isnan(t.at("K_31").computed));
    CHECK_THROWS_AS(t.at("bogus"), std::out_of_range);
}
