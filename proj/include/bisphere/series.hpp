#pragma once

#include <cstdint>
#include <stdexcept>

#include "bisphere/series_id.hpp"

namespace bisphere {

enum class Method { Direct, Asymptotic };

// Result of evaluating a series by either method.  For Direct evaluations
// tail_bound is a rigorous geometric bound on the omitted tail; for
// Asymptotic ones it is 0 (no truncation) and within_validity records
// whether eta1 lay inside the (0, 0.2] window the closed forms target.
struct EvalReport {
    double value = 0.0;
    std::uint64_t terms_used = 0;
    double tail_bound = 0.0;
    Method method = Method::Direct;
    bool within_validity = true;
};

// Direct summation exceeded its term budget before converging.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double partial, std::uint64_t terms)
        : std::runtime_error(what), partial_sum_(partial), terms_(terms) {}
    double partial_sum() const { return partial_sum_; }
    std::uint64_t terms() const { return terms_; }

  private:
    double partial_sum_;
    std::uint64_t terms_;
};

// n-th summand of the series (exact, cancellation-safe).
double series_term(const SeriesId& id, double eta1, std::uint64_t n);

// Truncated direct summation with compensated accumulation.  Stops when a
// rigorous geometric tail bound drops below rel_tol * |partial sum|.
EvalReport eval_series_direct(const SeriesId& id, double eta1, double rel_tol = 1e-12);

}  // namespace bisphere
