#pragma once

#include "bisphere/quadrature.hpp"
#include "bisphere/series.hpp"
#include "bisphere/series_id.hpp"

namespace bisphere {

// Euler's constant, and Gamma = euler_gamma + log(4/eta1).
inline constexpr double kEulerGamma = 0.577215664901533;
inline constexpr double kValidityEtaMax = 0.2;

// Closed-form (matched-asymptotic) value of a series.  Constants referenced
// by the form are resolved against `constants` (published value preferred).
// Outside eta1 in (0, 0.2] the report carries within_validity = false but is
// still evaluated.
EvalReport eval_series_asymptotic(const SeriesId& id, double eta1,
                                  const ConstantTable& constants);

// Split-parameter expansions for T0(eta1) and U0(eta1): inner sum expanded
// for small eta1 plus Euler-Maclaurin outer part.  Their sum is X-free and
// equals the closed form.  Requires 0 < eta1 < X < 1.
double t0_inner(double eta1, double X);
double t0_outer(double eta1, double X, const ConstantTable& constants);
double u0_inner(double eta1, double X);
double u0_outer(double eta1, double X, const ConstantTable& constants);

// Labels of the table constants referenced by a series' closed form.
std::vector<std::string> form_constant_labels(const SeriesId& id);

}  // namespace bisphere
