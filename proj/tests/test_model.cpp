#include <doctest.h>

#include <cmath>

#include "bisphere/geometry.hpp"
#include "bisphere/series_id.hpp"

using namespace bisphere;

TEST_CASE("eta_from_xi: sqrt policy is definitional") {
    CHECK(eta_from_xi(1e-4, EtaMap::SqrtApprox) == doctest::Approx(1e-2).epsilon(1e-15));
    CHECK(eta_from_xi(1e-2, EtaMap::SqrtApprox) == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("eta_from_xi: arccosh policy near xi = 1e-2") {
    const double v = eta_from_xi(1e-2, EtaMap::ExactArccosh);
    CHECK(v < 0.1);                               // sqrt(2x)(1 - x/12 + ...) undershoots
    CHECK(std::abs(v - 0.1) / 0.1 < 5e-4);        // within 0.05 %
    CHECK(std::cosh(v) == doctest::Approx(1.005).epsilon(1e-14));
}

TEST_CASE("eta_from_xi: domain errors") {
    CHECK_THROWS_AS(eta_from_xi(0.0), std::invalid_argument);
    CHECK_THROWS_AS(eta_from_xi(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(eta_from_xi(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(eta_from_xi(std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("eta_from_xi: strictly increasing, policies agree near contact") {
    double prev_s = 0.0, prev_a = 0.0;
    for (int i = 0; i <= 40; ++i) {
        const double xi = std::pow(10.0, -6.0 + 4.0 * i / 40.0);
        const double s = eta_from_xi(xi, EtaMap::SqrtApprox);
        const double a = eta_from_xi(xi, EtaMap::ExactArccosh);
        CHECK(s > prev_s);
        CHECK(a > prev_a);
        CHECK(std::abs(a - s) / s <= 1e-3);   // xi in [1e-6, 1e-2]
        CHECK(std::abs(a - s) / s <= xi / 20.0);
        prev_s = s;
        prev_a = a;
    }
}

TEST_CASE("SeriesId round-trips and enumerates 24 values") {
    CHECK(SeriesId::all().size() == 24);
    for (const SeriesId& id : SeriesId::all()) {
        CHECK(SeriesId::from_key(id.key()) == id);
    }
    CHECK(SeriesId::from_key("U2k3").name() == "U2(3eta1)");
    CHECK_THROWS_AS(SeriesId::from_key("T4k1"), std::invalid_argument);
    CHECK_THROWS_AS(SeriesId::from_key("T0k4"), std::invalid_argument);
    CHECK_THROWS_AS(SeriesId::from_key("X0k1"), std::invalid_argument);
}

TEST_CASE("FieldConfig validation") {
    CHECK_NOTHROW((FieldConfig{1.0, 1.0, M_PI}.validate()));
    CHECK_THROWS_AS((FieldConfig{std::nan(""), 1.0, 0.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((FieldConfig{1.0, 1.0, 4.0}.validate()), std::invalid_argument);
}
