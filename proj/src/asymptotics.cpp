#include "bisphere/asymptotics.hpp"

#include <cmath>

#include "tables.hpp"

namespace bisphere {
namespace {

const detail::FormSpec& form_for(const SeriesId& id) {
    std::size_t n;
    const detail::FormSpec* fs = detail::forms(&n);
    const std::string key = id.key();
    for (std::size_t i = 0; i < n; ++i)
        if (key == fs[i].id) return fs[i];
    throw std::out_of_range("no closed form for " + key);
}

}  // namespace

EvalReport eval_series_asymptotic(const SeriesId& id, double eta1,
                                  const ConstantTable& constants) {
    if (!(eta1 > 0.0) || !std::isfinite(eta1))
        throw std::invalid_argument("asymptotics: eta1 must be positive and finite");
    const detail::FormSpec& f = form_for(id);
    const double gam = kEulerGamma + std::log(4.0 / eta1);
    double value = 0.0;
    for (int i = 0; i < f.nterms; ++i) {
        const detail::FormTerm& t = f.terms[i];
        const double ep = std::pow(eta1, t.power);
        switch (t.kind) {
            case detail::kFtRat:
                value += t.coeff * ep;
                break;
            case detail::kFtPi2:
                value += t.coeff * M_PI * M_PI * ep;
                break;
            case detail::kFtGamma:
                value += t.coeff * ep * (gam - t.gamma_shift);
                break;
            default:
                value += t.coeff * constants.resolve(t.label) * ep;
        }
    }
    EvalReport r;
    r.value = value;
    r.terms_used = 0;
    r.tail_bound = 0.0;
    r.method = Method::Asymptotic;
    r.within_validity = eta1 <= kValidityEtaMax;
    return r;
}

std::vector<std::string> form_constant_labels(const SeriesId& id) {
    const detail::FormSpec& f = form_for(id);
    std::vector<std::string> out;
    for (int i = 0; i < f.nterms; ++i)
        if (f.terms[i].kind == detail::kFtConst) out.emplace_back(f.terms[i].label);
    return out;
}

namespace {
void check_split(double eta1, double X) {
    if (!(eta1 > 0.0 && eta1 < X && X < 1.0))
        throw std::invalid_argument("split expansions require 0 < eta1 < X < 1");
}
}  // namespace

// Inner sum of T0(eta1): first N+1 terms expanded for small eta1, N = X/eta1.
double t0_inner(double eta1, double X) {
    check_split(eta1, X);
    const double gam = kEulerGamma + std::log(4.0 / eta1);
    return M_PI * M_PI / (32.0 * eta1 * eta1) - gam / (8.0 * eta1) + 1.0 / 24.0 +
           1.0 / (16.0 * X * X) - 1.0 / (8.0 * X) - 1.0 / (16.0 * X * eta1) -
           std::log(X) / (8.0 * eta1) + X / (24.0 * eta1);
}

// Euler-Maclaurin outer part of T0(eta1); the X-terms cancel against the inner.
double t0_outer(double eta1, double X, const ConstantTable& constants) {
    check_split(eta1, X);
    const double K11 = constants.resolve("K_11");
    const double C13 = constants.resolve("C_13");
    return -1.0 / (16.0 * X * X) + 1.0 / (8.0 * X) + 1.0 / (16.0 * X * eta1) +
           std::log(X) / (8.0 * eta1) - X / (24.0 * eta1) + 1.0 / (24.0 * eta1) - 1.0 / 48.0 +
           K11 / eta1 - C13;
}

double u0_inner(double eta1, double X) {
    check_split(eta1, X);
    const double gam = kEulerGamma + std::log(4.0 / eta1);
    return 1.0 / (8.0 * eta1 * eta1) + (1.0 - 1.0 / eta1) * gam / 8.0 - 1.0 / 24.0 +
           3.0 / (32.0 * X * X) - 1.0 / (8.0 * X) - 1.0 / (16.0 * X * eta1) +
           (1.0 - 1.0 / eta1) * std::log(X) / 8.0 + X / (24.0 * eta1);
}

double u0_outer(double eta1, double X, const ConstantTable& constants) {
    check_split(eta1, X);
    const double K131 = constants.resolve("K_131");
    const double K132 = constants.resolve("K_132");
    return -3.0 / (32.0 * X * X) + 1.0 / (8.0 * X) + 1.0 / (16.0 * X * eta1) -
           (1.0 - 1.0 / eta1) * std::log(X) / 8.0 - X / (24.0 * eta1) + 1.0 / (24.0 * eta1) -
           1.0 / 48.0 + K131 / eta1 - K132;
}

}  // namespace bisphere
