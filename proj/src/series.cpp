#include "bisphere/series.hpp"

#include <cmath>

namespace bisphere {
namespace {

constexpr std::uint64_t kTermBudget = 100'000'000;

// Summand with the exponential-minus-one denominators.  Written so that no
// intermediate overflows: for large argument the e^{kt} numerator is folded
// into the denominator exponentials, leaving exp of a negative number.
double term_value(Family family, int moment, int k, double eta1, std::uint64_t n) {
    const double t = (2.0 * static_cast<double>(n) + 1.0) * eta1;
    double w = 1.0;
    const double q = 2.0 * static_cast<double>(n) + 1.0;
    for (int i = 0; i < moment; ++i) w *= q;

    if (family == Family::T) {
        if (t < 20.0) {
            const double d = std::expm1(2.0 * t);
            return w * std::exp(k * t) / (d * d);
        }
        const double r = std::exp(-2.0 * t);
        const double f = 1.0 - r;
        return w * std::exp((k - 4.0) * t) / (f * f);
    }
    const double t2 = t + 2.0 * eta1;  // (2n+3) eta1
    if (t < 20.0) {
        return w * std::exp(k * t) / (std::expm1(2.0 * t) * std::expm1(2.0 * t2));
    }
    const double f1 = 1.0 - std::exp(-2.0 * t);
    const double f2 = 1.0 - std::exp(-2.0 * t2);
    return w * std::exp((k - 4.0) * t - 4.0 * eta1) / (f1 * f2);
}

void check_inputs(const SeriesId& id, double eta1) {
    if (!(eta1 > 0.0) || !std::isfinite(eta1))
        throw std::invalid_argument("series: eta1 must be positive and finite");
    if (id.moment < 0 || id.moment > 3 || id.multiplier < 1 || id.multiplier > 3)
        throw std::invalid_argument("series: invalid id " + id.key());
}

}  // namespace

double series_term(const SeriesId& id, double eta1, std::uint64_t n) {
    check_inputs(id, eta1);
    return term_value(id.family, id.moment, id.multiplier, eta1, n);
}

EvalReport eval_series_direct(const SeriesId& id, double eta1, double rel_tol) {
    check_inputs(id, eta1);
    if (!(rel_tol > 0.0) || rel_tol > 1e-2)
        throw std::invalid_argument("series: rel_tol must lie in (0, 1e-2]");

    // Neumaier compensated accumulation: the sum spans many orders of
    // magnitude near contact and must stay a trustworthy oracle.
    double sum = 0.0, comp = 0.0;
    const double decay = std::exp(-(4.0 - id.multiplier) * 2.0 * eta1);
    std::uint64_t n = 0;
    for (;; ++n) {
        if (n > kTermBudget)
            throw ConvergenceError("series " + id.key() + " exceeded term budget", sum + comp, n);
        const double term = term_value(id.family, id.moment, id.multiplier, eta1, n);
        const double t = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        // ratio bound r: ((2n+3)/(2n+1))^moment * decay, valid term-wise since
        // the denominator factors only grow with n
        double r = decay;
        const double g = (2.0 * static_cast<double>(n) + 3.0) / (2.0 * static_cast<double>(n) + 1.0);
        for (int i = 0; i < id.moment; ++i) r *= g;
        if (r < 1.0) {
            const double tail = term * r / (1.0 - r);
            const double total = sum + comp;
            if (n >= 4 && tail <= rel_tol * std::abs(total))
                return EvalReport{total, n + 1, tail, Method::Direct, true};
        }
    }
}

}  // namespace bisphere
