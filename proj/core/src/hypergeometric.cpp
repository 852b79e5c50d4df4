#include <cmath>
#include <sstream>

#include "series.hpp"
#include "umbral/errors.hpp"
#include "umbral/special.hpp"

namespace umbral {
namespace {

using detail::DoubleDouble;

bool is_nonpositive_integer(double x) noexcept { return x <= 0.0 && x == std::floor(x); }

void require_not_pole(const char* what, const char* name, double v) {
  if (is_nonpositive_integer(v)) {
    std::ostringstream msg;
    msg << what << ": parameter " << name << " = " << v << " is a non-positive integer";
    throw PoleError(msg.str());
  }
}

// 1 / Gamma(x), zero at the poles of Gamma.
double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / gamma(x);
}

// (p + n) formed exactly.
DoubleDouble shifted(double p, std::size_t n) { return detail::two_sum(p, static_cast<double>(n)); }

SeriesResult<double> hyp1f1_series(double a, double c, double x, const EvalConfig& cfg) {
  const auto s = detail::sum_ratio_series(
      DoubleDouble(1.0),
      [=](std::size_t n) {
        return shifted(a, n) * DoubleDouble(x) / (shifted(c, n) * DoubleDouble(static_cast<double>(n + 1)));
      },
      cfg);
  return detail::require_converged(s.result, "hyp1f1");
}

} // namespace

SeriesResult<double> hyp1f1(double a, double c, double x, const EvalConfig& cfg) {
  cfg.validate();
  require_not_pole("hyp1f1", "c", c);
  if (x == 0.0) return {1.0, 0.0, 1, true};
  const bool kummer = x < -30.0 || (x < 0.0 && c - a > 0.0 && c > 0.0);
  if (!kummer) return hyp1f1_series(a, c, x, cfg);
  SeriesResult<double> r = hyp1f1_series(c - a, c, -x, cfg);
  const double scale = std::exp(x);
  r.value *= scale;
  r.err_estimate *= scale;
  return r;
}

SeriesResult<double> hyp2f1(double a, double b, double c, double x, const EvalConfig& cfg) {
  cfg.validate();
  require_not_pole("hyp2f1", "c", c);
  if (std::fabs(x) > 1.0 || std::isnan(x)) {
    std::ostringstream msg;
    msg << "hyp2f1: |x| = " << std::fabs(x) << " > 1 is outside the series domain";
    throw DomainError(msg.str());
  }
  if (x == 0.0) return {1.0, 0.0, 1, true};
  if (x == 1.0) {
    const double excess = c - a - b;
    if (!(excess > 0.0)) {
      std::ostringstream msg;
      msg << "hyp2f1: series diverges at x = 1 (c - a - b = " << excess << ")";
      throw DomainError(msg.str());
    }
    const double v = gamma(c) * gamma(excess) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
    return {v, 0.0, 0, true};
  }
  const auto s = detail::sum_ratio_series(
      DoubleDouble(1.0),
      [=](std::size_t n) {
        return shifted(a, n) * shifted(b, n) * DoubleDouble(x) /
               (shifted(c, n) * DoubleDouble(static_cast<double>(n + 1)));
      },
      cfg);
  return detail::require_converged(s.result, "hyp2f1");
}

SeriesResult<double> hyp1f2(double a, double b, double c, double x, const EvalConfig& cfg) {
  cfg.validate();
  require_not_pole("hyp1f2", "b", b);
  require_not_pole("hyp1f2", "c", c);
  if (x == 0.0) return {1.0, 0.0, 1, true};
  const auto s = detail::sum_ratio_series(
      DoubleDouble(1.0),
      [=](std::size_t n) {
        return shifted(a, n) * DoubleDouble(x) /
               (shifted(b, n) * shifted(c, n) * DoubleDouble(static_cast<double>(n + 1)));
      },
      cfg);
  return detail::require_converged(s.result, "hyp1f2");
}

double hyp1f1_derivative(unsigned s, double a, double c, double x, const EvalConfig& cfg) {
  require_not_pole("hyp1f1_derivative", "c", c);
  require_not_pole("hyp1f1_derivative", "c+s", c + s);
  if (s == 0) return hyp1f1(a, c, x, cfg).value;
  return pochhammer(a, s) / pochhammer(c, s) * hyp1f1(a + s, c + s, x, cfg).value;
}

} // namespace umbral
