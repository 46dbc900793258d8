#include <doctest.h>

#include <cmath>

#include "bisphere/series.hpp"
#include "reference_gen.hpp"

using namespace bisphere;

TEST_CASE("series_term: scalar examples") {
    // (T, m=0, k=2, eta1=1, n=0) -> e^2/(e^2-1)^2
    const double e2 = std::exp(2.0);
    CHECK(series_term(SeriesId{Family::T, 0, 2}, 1.0, 0) ==
          doctest::Approx(e2 / ((e2 - 1) * (e2 - 1))).epsilon(1e-14));
    CHECK(series_term(SeriesId{Family::T, 0, 2}, 1.0, 0) == doctest::Approx(0.18100).epsilon(1e-4));

    // moment weight: (T,1,k) term = (2n+1) * (T,0,k) term
    for (std::uint64_t n : {0ull, 3ull, 17ull}) {
        const double t0 = series_term(SeriesId{Family::T, 0, 1}, 0.3, n);
        const double t1 = series_term(SeriesId{Family::T, 1, 1}, 0.3, n);
        CHECK(t1 == doctest::Approx((2.0 * n + 1.0) * t0).epsilon(1e-14));
    }
    // numerator ratio: (U,0,3) term = (U,0,1) term * e^{2(2n+1)eta1}
    for (std::uint64_t n : {0ull, 2ull, 9ull}) {
        const double u1 = series_term(SeriesId{Family::U, 0, 1}, 0.2, n);
        const double u3 = series_term(SeriesId{Family::U, 0, 3}, 0.2, n);
        CHECK(u3 == doctest::Approx(u1 * std::exp(2.0 * (2.0 * n + 1.0) * 0.2)).epsilon(1e-13));
    }
}

TEST_CASE("series_term: positivity wherever the term is representable") {
    for (const SeriesId& id : SeriesId::all())
        for (double eta : {1e-3, 1e-2, 0.3, 2.0, 20.0})
            for (std::uint64_t n : {0ull, 1ull, 10ull, 1000ull}) {
                // skip combinations whose true value underflows double
                if ((4.0 - id.multiplier) * (2.0 * n + 1.0) * eta > 690.0) continue;
                CHECK(series_term(id, eta, n) > 0.0);
            }
}

TEST_CASE("eval_series_direct: large eta1 is dominated by the n = 0 term") {
    const EvalReport r = eval_series_direct(SeriesId{Family::T, 0, 1}, 20.0, 1e-12);
    const double n0 = std::exp(20.0) / (std::expm1(40.0) * std::expm1(40.0));
    CHECK(r.value == doctest::Approx(n0).epsilon(1e-12));
    CHECK(r.value == doctest::Approx(std::exp(-60.0)).epsilon(1e-8));
}

TEST_CASE("eval_series_direct: leading-order magnitudes near contact") {
    const double t0 = eval_series_direct(SeriesId{Family::T, 0, 1}, 0.01, 1e-14).value;
    CHECK(t0 == doctest::Approx(M_PI * M_PI / (32.0 * 1e-4)).epsilon(5e-2));
    const double u0 = eval_series_direct(SeriesId{Family::U, 0, 1}, 0.01, 1e-14).value;
    CHECK(u0 == doctest::Approx(1.0 / 8e-4).epsilon(1e-1));
}

TEST_CASE("eval_series_direct: frozen high-precision references") {
    for (const auto& ref : refdata::kDirectValues) {
        const EvalReport r = eval_series_direct(SeriesId::from_key(ref.id), ref.eta1, 1e-13);
        CHECK_MESSAGE(r.value == doctest::Approx(ref.value).epsilon(5e-12),
                      ref.id << " at eta1=" << ref.eta1);
    }
}

TEST_CASE("eval_series_direct: U0(2 eta1) closed form") {
    // U0(2 eta1) telescopes to 1/((e^{2eta}-1)(e^{4eta}-1)); an independent
    // cross-check of the summation path.
    for (double eta : {1e-3, 0.05, 0.4}) {
        const double sum = eval_series_direct(SeriesId{Family::U, 0, 2}, eta, 1e-13).value;
        const double exact = 1.0 / (std::expm1(2.0 * eta) * std::expm1(4.0 * eta));
        CHECK(sum == doctest::Approx(exact).epsilon(1e-11));
    }
}

TEST_CASE("eval_series_direct: oracle self-consistency") {
    // summing series_term over terms_used reproduces the reported value
    for (const char* key : {"T2k1", "U1k3", "U3k2"}) {
        const SeriesId id = SeriesId::from_key(key);
        const EvalReport r = eval_series_direct(id, 0.05, 1e-10);
        double s = 0.0;
        for (std::uint64_t n = r.terms_used; n-- > 0;) s += series_term(id, 0.05, n);
        CHECK(s == doctest::Approx(r.value).epsilon(1e-12));
    }
}

TEST_CASE("eval_series_direct: tail bound is sound") {
    for (const char* key : {"T0k1", "T3k3", "U0k1", "U2k2"}) {
        const SeriesId id = SeriesId::from_key(key);
        for (double eta : {2e-3, 0.03, 0.7}) {
            const EvalReport coarse = eval_series_direct(id, eta, 1e-6);
            const EvalReport fine = eval_series_direct(id, eta, 1e-8 / 100.0);
            CHECK(coarse.tail_bound >= 0.0);
            CHECK(coarse.tail_bound <= 1e-6 * std::abs(coarse.value));
            CHECK(std::abs(fine.value - coarse.value) <= coarse.tail_bound * (1 + 1e-9));
        }
    }
}

TEST_CASE("eval_series_direct: strictly decreasing in eta1") {
    for (const SeriesId& id : SeriesId::all()) {
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 12; ++i) {
            const double eta = std::pow(10.0, -3.0 + 3.0 * i / 12.0);  // [1e-3, 1]
            const double v = eval_series_direct(id, eta, 1e-10).value;
            CHECK(v > 0.0);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("eval_series_direct: moment ordering at fixed (k, eta1)") {
    for (Family fam : {Family::T, Family::U}) {
        for (int k = 1; k <= 3; ++k) {
            for (double eta : {5e-3, 0.1}) {
                for (int m = 0; m < 3; ++m) {
                    const double lo = eval_series_direct(SeriesId{fam, m, k}, eta, 1e-10).value;
                    const double hi =
                        eval_series_direct(SeriesId{fam, m + 1, k}, eta, 1e-10).value;
                    CHECK(hi >= lo);
                }
            }
        }
    }
}

TEST_CASE("eval_series_direct: term budget carries the partial sum") {
    // convergence needs ~1/sqrt(eta1 * rel_tol) terms; this sits beyond 1e8
    try {
        eval_series_direct(SeriesId{Family::T, 0, 3}, 1e-14, 1e-6);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.partial_sum() > 0.0);
        CHECK(e.terms() > 100'000'000ull);
    }
}

TEST_CASE("eval_series_direct: input validation") {
    CHECK_THROWS_AS(eval_series_direct(SeriesId{Family::T, 0, 1}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(eval_series_direct(SeriesId{Family::T, 0, 1}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(eval_series_direct(SeriesId{Family::T, 0, 1}, 0.1, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_series_direct(SeriesId{Family::T, 0, 1}, 0.1, 0.5),
                    std::invalid_argument);
}
