#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "bisphere/forces.hpp"
#include "reference_gen.hpp"

using namespace bisphere;

namespace {
const ConstantTable& table() {
    static const ConstantTable t = ConstantTable::paper_defaults();
    return t;
}

NearContactGeometry geometry_at_eta(double eta1) {
    return NearContactGeometry{2.0 * (std::cosh(eta1) - 1.0), eta1, EtaMap::ExactArccosh};
}
}  // namespace

TEST_CASE("builtin recipe set: complete, checksummed, matches the data file") {
    const RecipeSet& rs = RecipeSet::builtin();
    for (int i = 0; i < 10; ++i) CHECK(rs.coefficients[i].id == i + 1);
    CHECK(rs.version == 1);

    std::ifstream in(std::string(BISPHERE_SOURCE_DIR) + "/data/recipes.json");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    const RecipeSet from_file = RecipeSet::parse(ss.str());
    CHECK(from_file.checksum == rs.checksum);
}

TEST_CASE("recipe parsing rejects corrupted files") {
    CHECK_THROWS(RecipeSet::parse("{\"version\":1,\"checksum\":\"0\",\"coefficients\":[]}"));
    CHECK_THROWS(RecipeSet::load_file("/nonexistent/recipes.json"));
}

TEST_CASE("coefficients match the independent two-sphere solver") {
    // reference values from a multipole + Maxwell-stress solver
    for (const auto& ref : refdata::kForceCoefficients) {
        const auto F = eval_coefficients(geometry_at_eta(ref.u), Method::Direct,
                                         RecipeSet::builtin(), table(), nullptr, 1e-13);
        for (int i = 0; i < 10; ++i)
            CHECK_MESSAGE(F[i] == doctest::Approx(ref.F[i]).epsilon(1e-8),
                          "F" << i + 1 << " at u=" << ref.u);
    }
}

TEST_CASE("coefficients: near-contact frozen references") {
    for (const auto& ref : refdata::kForceNearContact) {
        const auto F = eval_coefficients(geometry_at_eta(ref.u), Method::Direct,
                                         RecipeSet::builtin(), table(), nullptr, 1e-13);
        for (int i = 0; i < 10; ++i)
            CHECK_MESSAGE(F[i] == doctest::Approx(ref.F[i]).epsilon(1e-6),
                          "F" << i + 1 << " at u=" << ref.u);
    }
}

TEST_CASE("equal-sphere symmetries of the coefficients") {
    const auto F = eval_coefficients(NearContactGeometry::from_xi(1e-3), Method::Direct,
                                     RecipeSet::builtin(), table());
    CHECK(F[4] == doctest::Approx(F[6]).epsilon(1e-14));   // F5 == F7
    CHECK(F[2] == doctest::Approx(-F[3]).epsilon(1e-14));  // F3 == -F4
    CHECK(F[8] == doctest::Approx(-F[9]).epsilon(1e-14));  // F9 == -F10
}

TEST_CASE("|F2| is tiny compared to |F1| near contact") {
    const auto F = eval_coefficients(NearContactGeometry::from_xi(1e-4), Method::Direct,
                                     RecipeSet::builtin(), table());
    CHECK(std::abs(F[1]) < 1e-2 * std::abs(F[0]));
}

TEST_CASE("all ten |F_n| decrease with separation") {
    SeriesCache cache;
    std::array<double, 10> prev{};
    bool first = true;
    for (double xi : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2}) {
        const auto F = eval_coefficients(NearContactGeometry::from_xi(xi), Method::Direct,
                                         RecipeSet::builtin(), table(), &cache, 1e-12);
        if (!first)
            for (int i = 0; i < 10; ++i) CHECK_MESSAGE(std::abs(F[i]) < std::abs(prev[i]), "F" << i + 1);
        prev = F;
        first = false;
    }
}

TEST_CASE("F1 and F8 agree between methods at close separation") {
    SeriesCache cache;
    const auto geo = NearContactGeometry::from_xi(1e-4);
    const auto Fd =
        eval_coefficients(geo, Method::Direct, RecipeSet::builtin(), table(), &cache, 1e-12);
    const auto Fa =
        eval_coefficients(geo, Method::Asymptotic, RecipeSet::builtin(), table(), &cache);
    CHECK(std::abs(Fd[0] - Fa[0]) / std::abs(Fd[0]) < 1e-2);
    CHECK(std::abs(Fd[7] - Fa[7]) / std::abs(Fd[7]) < 1e-2);
}

TEST_CASE("force components: structural identities") {
    SeriesCache cache;
    const auto geo = NearContactGeometry::from_xi(1e-3);
    const RecipeSet& rs = RecipeSet::builtin();

    SUBCASE("theta = 0 gives exactly zero transverse force") {
        const ForceResult r =
            force_components(geo, FieldConfig{0.7, 2.0, 0.0}, Method::Direct, rs, table(), &cache);
        CHECK(r.fx == 0.0);
    }
    SUBCASE("beta = 0 leaves only the charge terms") {
        const double alpha = 1.7;
        const ForceResult r = force_components(geo, FieldConfig{alpha, 0.0, 0.3}, Method::Direct,
                                               rs, table(), &cache);
        const auto& F = r.coefficients;
        CHECK(r.fz == doctest::Approx(F[4] * alpha * alpha + F[5] * alpha + F[6]).epsilon(1e-15));
        CHECK(r.fx == 0.0);
    }
    SUBCASE("fz is quadratic in beta") {
        const double alpha = 0.5, th = 0.9;
        auto fz = [&](double beta) {
            return force_components(geo, FieldConfig{alpha, beta, th}, Method::Direct, rs,
                                    table(), &cache)
                .fz;
        };
        // fit on three samples, check a fourth
        const double f0 = fz(0.0), f1 = fz(1.0), f2 = fz(2.0);
        const double a2 = (f2 - 2 * f1 + f0) / 2.0;
        const double a1 = f1 - f0 - a2;
        const double pred = a2 * 9.0 + a1 * 3.0 + f0;
        CHECK(std::abs(fz(3.0) - pred) <= 1e-10 * std::abs(pred));
    }
    SUBCASE("trig parity: fz even, fx odd in theta") {
        for (double th : {0.3, 1.2}) {
            const ForceResult p = force_components(geo, FieldConfig{1.3, 0.8, th}, Method::Direct,
                                                   rs, table(), &cache);
            const ForceResult n = force_components(geo, FieldConfig{1.3, 0.8, -th},
                                                   Method::Direct, rs, table(), &cache);
            CHECK(p.fz == doctest::Approx(n.fz).epsilon(1e-14));
            CHECK(p.fx == doctest::Approx(-n.fx).epsilon(1e-14));
        }
    }
    SUBCASE("methods agree at close separation") {
        const auto tight = NearContactGeometry::from_xi(1e-4);
        const FieldConfig f{1.0, 1.0, M_PI / 4.0};
        const double d = force_components(tight, f, Method::Direct, rs, table(), &cache).fz;
        const double a = force_components(tight, f, Method::Asymptotic, rs, table(), &cache).fz;
        CHECK(std::abs(d - a) / std::abs(d) < 1e-2);
    }
}

TEST_CASE("force trends at alpha=1, theta=pi/4, beta=1") {
    SeriesCache cache;
    const FieldConfig f{1.0, 1.0, M_PI / 4.0};
    double prev_fz = std::numeric_limits<double>::infinity(), prev_fx = -1.0;
    for (double xi : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2}) {
        const ForceResult r = force_components(NearContactGeometry::from_xi(xi), f,
                                               Method::Direct, RecipeSet::builtin(), table(),
                                               &cache, 1e-12);
        CHECK(std::abs(r.fz) < std::abs(prev_fz));
        CHECK(std::abs(r.fx) > prev_fx);
        prev_fz = r.fz;
        prev_fx = std::abs(r.fx);
    }
}

TEST_CASE("series cache returns consistent values across methods") {
    SeriesCache cache;
    const SeriesId id{Family::T, 1, 2};
    const double direct = cache.value(id, 0.02, Method::Direct, table(), 1e-12);
    const double again = cache.value(id, 0.02, Method::Direct, table(), 1e-12);
    CHECK(direct == again);
    const double asym = cache.value(id, 0.02, Method::Asymptotic, table(), 1e-12);
    CHECK(asym != doctest::Approx(0.0));
    CHECK(std::abs(asym - direct) / direct < 1e-4);
}
