#include <cmath>
#include <numbers>
#include <sstream>

#include "dawson_detail.hpp"
#include "series.hpp"
#include "umbral/errors.hpp"
#include "umbral/special.hpp"

namespace umbral {
namespace detail {

double exp_neg_square(double x) noexcept {
  const DoubleDouble sq = two_prod(x, x);
  return std::exp(-sq.hi) * (1.0 - sq.lo);
}

Estimate dawson_asymptotic(unsigned m, double x, const EvalConfig& cfg) {
  const double inv_x2 = 1.0 / (x * x);
  // term_0 = (1/2) (-1)^m m! x^{-1-m}
  double term = 0.5 * std::pow(x, -1.0 - m);
  for (unsigned j = 1; j <= m; ++j) term *= -static_cast<double>(j);
  double sum = 0.0;
  std::size_t used = 0;
  double next = term;
  for (std::size_t k = 0; k < cfg.max_terms; ++k) {
    sum += term;
    ++used;
    const double kk = static_cast<double>(k);
    next = term * (2 * kk + 1 + m) * (2 * kk + 2 + m) / (2.0 * (2 * kk + 2)) * inv_x2;
    if (std::fabs(next) < cfg.term_threshold(std::fabs(sum)) || std::fabs(next) >= std::fabs(term)) break;
    term = next;
  }
  return {sum, std::fabs(next), used, Method::asymptotic};
}

} // namespace detail

Estimate dawson_estimate(double x, const EvalConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(x)) throw DomainError("dawson: non-finite argument");
  const double ax = std::fabs(x);
  const double sign = x < 0.0 ? -1.0 : 1.0;
  if (ax == 0.0) return {0.0, 0.0, 1, Method::series};
  if (ax > detail::dawson_series_limit) {
    Estimate e = detail::dawson_asymptotic(0, ax, cfg);
    e.value *= sign;
    return e;
  }
  // exp(-x^2) * sum_n x^{2n+1} / (n! (2n+1)); every term positive.
  const double x2 = ax * ax;
  const auto s = detail::sum_ratio_series(
      detail::DoubleDouble(ax),
      [x2](std::size_t n) {
        const double nn = static_cast<double>(n);
        return detail::DoubleDouble(x2) * detail::DoubleDouble(2 * nn + 1) /
               (detail::DoubleDouble(nn + 1) * detail::DoubleDouble(2 * nn + 3));
      },
      cfg);
  detail::require_converged(s.result, "dawson");
  const double damp = detail::exp_neg_square(ax);
  return {sign * s.result.value * damp, s.result.err_estimate * damp, s.result.terms_used, Method::series};
}

double dawson(double x, const EvalConfig& cfg) { return dawson_estimate(x, cfg).value; }

double erfi(double x, const EvalConfig& cfg) {
  if (std::fabs(x) > erfi_max_argument) {
    std::ostringstream msg;
    msg << "erfi: |x| = " << std::fabs(x) << " exceeds " << erfi_max_argument;
    throw OverflowError(msg.str());
  }
  const detail::DoubleDouble sq = detail::two_prod(x, x);
  return 2.0 / std::sqrt(std::numbers::pi) * (std::exp(sq.hi) * (1.0 + sq.lo)) * dawson(x, cfg);
}

} // namespace umbral
