#pragma once

#include "umbral/config.hpp"
#include "umbral/result.hpp"

namespace umbral::detail {

/// Below this |x| the Dawson integral is summed from its positive-term
/// Maclaurin series; above it the asymptotic expansion is used.
inline constexpr double dawson_series_limit = 6.0;

/// m-th derivative of the Dawson integral from its termwise-differentiated
/// large-x expansion, truncated at the smallest term. Requires x > 0.
Estimate dawson_asymptotic(unsigned m, double x, const EvalConfig& cfg);

/// exp(-x^2) with x^2 formed exactly in double-double.
double exp_neg_square(double x) noexcept;

} // namespace umbral::detail
