#include <doctest.h>

#include <cmath>

#include "bisphere/asymptotics.hpp"
#include "bisphere/series.hpp"
#include "../src/tables.hpp"

using namespace bisphere;

namespace {
const ConstantTable& table() {
    static const ConstantTable t = ConstantTable::paper_defaults();
    return t;
}
}  // namespace

TEST_CASE("T0(eta1) closed form matches its explicit expression") {
    const double eta = 0.1;
    const double gam = kEulerGamma + std::log(4.0 / eta);
    const double expected = M_PI * M_PI / (32.0 * eta * eta) - gam / (8.0 * eta) + 1.0 / 48.0 +
                            1.0 / (24.0 * eta) + (-0.0416667) / eta - 0.0208333;
    const EvalReport r = eval_series_asymptotic(SeriesId{Family::T, 0, 1}, eta, table());
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-14));
    CHECK(r.tail_bound == 0.0);
    CHECK(r.within_validity);
}

TEST_CASE("closed forms track the direct sums inside the validity window") {
    for (const SeriesId& id : SeriesId::all()) {
        const double direct = eval_series_direct(id, 0.01, 1e-13).value;
        const double asym = eval_series_asymptotic(id, 0.01, table()).value;
        CHECK_MESSAGE(std::abs(asym - direct) / std::abs(direct) < 2e-3, id.key());
    }
}

TEST_CASE("validity window flag") {
    CHECK(eval_series_asymptotic(SeriesId{Family::U, 1, 2}, 0.19, table()).within_validity);
    CHECK_FALSE(eval_series_asymptotic(SeriesId{Family::U, 1, 2}, 0.5, table()).within_validity);
    CHECK_THROWS_AS(eval_series_asymptotic(SeriesId{Family::T, 0, 1}, -0.1, table()),
                    std::invalid_argument);
}

TEST_CASE("every form constant resolves against the table") {
    for (const SeriesId& id : SeriesId::all()) {
        for (const std::string& label : form_constant_labels(id)) {
            CHECK_NOTHROW(table().resolve(label));
        }
    }
}

TEST_CASE("X-split expansions: cancellation and X-dependence") {
    for (double eta : {1e-3, 3e-3, 1e-2}) {
        const double t0 = eval_series_asymptotic(SeriesId{Family::T, 0, 1}, eta, table()).value;
        const double u0 = eval_series_asymptotic(SeriesId{Family::U, 0, 1}, eta, table()).value;
        for (double X : {0.02, 0.05, 0.1}) {
            CHECK(std::abs(t0_inner(eta, X) + t0_outer(eta, X, table()) - t0) <=
                  1e-9 * std::abs(t0));
            CHECK(std::abs(u0_inner(eta, X) + u0_outer(eta, X, table()) - u0) <=
                  1e-9 * std::abs(u0));
        }
    }
    // the split itself genuinely depends on X
    CHECK(std::abs(t0_inner(1e-3, 0.05) - t0_inner(1e-3, 0.1)) > 1.0);
    CHECK(std::abs(u0_outer(1e-3, 0.05, table()) - u0_outer(1e-3, 0.02, table())) > 1.0);
    CHECK_THROWS_AS(t0_inner(0.1, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(u0_outer(1e-3, 1.5, table()), std::invalid_argument);
}

namespace {

// Highest-order behaviour read off each form: value * eta^{-min_power} -> L,
// where L may carry a (Gamma - shift) factor.
struct Leading {
    int power = 0;
    bool has_gamma = false;
    int shift = 0;
    double limit = 0.0;
};

Leading leading_of(const SeriesId& id) {
    std::size_t n;
    const detail::FormSpec* fs = detail::forms(&n);
    const std::string key = id.key();
    const detail::FormSpec* f = nullptr;
    for (std::size_t i = 0; i < n; ++i)
        if (key == fs[i].id) f = &fs[i];
    REQUIRE(f != nullptr);
    Leading lead;
    for (int i = 0; i < f->nterms; ++i) lead.power = std::min(lead.power, f->terms[i].power);
    for (int i = 0; i < f->nterms; ++i)
        if (f->terms[i].power == lead.power && f->terms[i].kind == detail::kFtGamma)
            lead.has_gamma = true;
    for (int i = 0; i < f->nterms; ++i) {
        const detail::FormTerm& t = f->terms[i];
        if (t.power != lead.power) continue;
        // with a log term present, only it survives the scaled limit
        if (lead.has_gamma) {
            if (t.kind == detail::kFtGamma) {
                lead.shift = t.gamma_shift;
                lead.limit += t.coeff;
            }
            continue;
        }
        switch (t.kind) {
            case detail::kFtRat:
                lead.limit += t.coeff;
                break;
            case detail::kFtPi2:
                lead.limit += t.coeff * M_PI * M_PI;
                break;
            default:
                lead.limit += t.coeff * table().resolve(t.label);
        }
    }
    return lead;
}

}  // namespace

TEST_CASE("scaled leading-order limits, one per series") {
    // spot checks of the extracted limits against the stated highest-order terms
    {
        const Leading t2 = leading_of(SeriesId{Family::T, 2, 1});
        CHECK(t2.power == -3);
        CHECK(t2.limit == doctest::Approx(0.25 - 0.15905).epsilon(1e-12));  // 1/4 + K_31
        const Leading t0 = leading_of(SeriesId{Family::T, 0, 1});
        CHECK(t0.limit == doctest::Approx(M_PI * M_PI / 32.0).epsilon(1e-12));
        const Leading u0 = leading_of(SeriesId{Family::U, 0, 1});
        CHECK(u0.limit == doctest::Approx(0.125).epsilon(1e-12));
    }
    for (const SeriesId& id : SeriesId::all()) {
        const Leading lead = leading_of(id);
        auto scaled_dev = [&](double eta) {
            double v = eval_series_asymptotic(id, eta, table()).value *
                       std::pow(eta, -lead.power);
            if (lead.has_gamma)
                v /= kEulerGamma + std::log(4.0 / eta) - lead.shift;
            return std::abs(v - lead.limit) / std::abs(lead.limit);
        };
        // log terms converge only as 1/log(1/eta); plain powers much faster
        const double coarse = scaled_dev(lead.has_gamma ? 1e-5 : 1e-4);
        const double fine = scaled_dev(lead.has_gamma ? 1e-9 : 1e-7);
        CHECK_MESSAGE(fine < (lead.has_gamma ? 2e-1 : 1e-3), id.key() << " dev " << fine);
        CHECK_MESSAGE(fine < coarse, id.key());  // converging toward the limit
    }
}

TEST_CASE("direct-vs-asymptotic relative error decreases with separation") {
    for (const SeriesId& id : SeriesId::all()) {
        double prev = std::numeric_limits<double>::infinity();
        for (double xi : {1e-2, 1e-3, 1e-4}) {
            const double eta = std::sqrt(xi);
            const double d = eval_series_direct(id, eta, 1e-13).value;
            const double a = eval_series_asymptotic(id, eta, table()).value;
            const double rel = std::abs(a - d) / std::abs(d);
            CHECK_MESSAGE(rel < prev, id.key() << " at xi=" << xi);
            prev = rel;
        }
    }
}
