#include "umbral/weights.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "series.hpp"
#include "umbral/errors.hpp"
#include "umbral/special.hpp"

namespace umbral {
namespace {

bool is_nonpositive_integer(double x) noexcept { return x <= 0.0 && x == std::floor(x); }

} // namespace

UmbralWeight gauss_weight() {
  return {[](double alpha) { return is_nonpositive_integer(alpha + 1.0) ? 0.0 : 1.0 / gamma(alpha + 1.0); },
          "all real alpha (zero where alpha + 1 is a non-positive integer)",
          [](double alpha) {
            return is_nonpositive_integer(alpha + 1.0) ? -std::numeric_limits<double>::infinity()
                                                       : -log_abs_gamma(alpha + 1.0);
          }};
}

UmbralWeight quasi_weight(unsigned n) {
  if (n == 0) throw DomainError("quasi_weight: n must be >= 1");
  const double nn = n;
  std::ostringstream note;
  note << "real alpha with alpha/" << n << " + 1 not a non-positive integer";
  return {[nn](double alpha) { return gamma(alpha / nn + 1.0); }, note.str(),
          [nn](double alpha) { return log_abs_gamma(alpha / nn + 1.0); }};
}

UmbralWeight pochhammer_weight(double a, double c) {
  return {[a, c](double k) {
            if (k < 0.0 || k != std::floor(k)) {
              std::ostringstream msg;
              msg << "pochhammer_weight: defined on non-negative integers only, got " << k;
              throw DomainError(msg.str());
            }
            return pochhammer(a, k) / pochhammer(c, k);
          },
          "non-negative integers k", {}};
}

UmbralWeight levy_weight() {
  return {[](double beta) { return sin_pi(beta) == 0.0 ? 0.0 : gamma(beta + 1.0) * sin_pi(beta); },
          "real beta with beta + 1 not a non-positive integer",
          [](double beta) {
            const double s = sin_pi(beta);
            return s == 0.0 ? -std::numeric_limits<double>::infinity()
                            : log_abs_gamma(beta + 1.0) + std::log(std::fabs(s));
          }};
}

UmbralWeight scaled(UmbralWeight w, double scale) {
  UmbralWeight out;
  out.weight = [inner = w.weight, scale](double alpha) { return inner(scale * alpha); };
  if (w.log_abs_weight) {
    out.log_abs_weight = [inner = w.log_abs_weight, scale](double alpha) { return inner(scale * alpha); };
  }
  std::ostringstream note;
  note << "alpha with " << scale << " * alpha in: " << w.domain_note;
  out.domain_note = note.str();
  return out;
}

template <class T>
SeriesResult<T> umbral_exp(const UmbralWeight& w, T z, double shift, const EvalConfig& cfg) {
  cfg.validate();
  // z^r / r! is carried both directly and as (log magnitude, phase) so terms
  // stay finite when the weight and the power separately leave double range.
  T power = T(1);
  double log_mag = 0.0;
  const double zmag = std::abs(z);
  const T phase_step = zmag > 0.0 ? z / zmag : T(1);
  T phase = T(1);
  auto term = [&](std::size_t r) -> T {
    if (r > 0) {
      const double rr = static_cast<double>(r);
      power *= z / rr;
      log_mag += std::log(zmag) - std::log(rr);
      phase *= phase_step;
    }
    if (zmag == 0.0 && r > 0) return T(0);
    const double alpha = static_cast<double>(r) + shift;
    const double wv = w.weight(alpha);
    const bool power_normal = std::isfinite(std::abs(power)) && std::abs(power) > 1e-280;
    if (std::isfinite(wv) && power_normal) return wv * power;
    if (wv == 0.0) return T(0);
    if (w.log_abs_weight) {
      const double sign = wv < 0.0 ? -1.0 : 1.0;
      return sign * std::exp(w.log_abs_weight(alpha) + log_mag) * phase;
    }
    return wv * power;
  };
  const auto result = detail::sum_series<T>(term, cfg);
  if (!std::isfinite(std::abs(result.value))) throw ConvergenceError("umbral_exp: non-finite partial sum");
  return detail::require_converged(result, "umbral_exp");
}

template SeriesResult<double> umbral_exp(const UmbralWeight&, double, double, const EvalConfig&);
template SeriesResult<std::complex<double>> umbral_exp(const UmbralWeight&, std::complex<double>, double,
                                                       const EvalConfig&);

} // namespace umbral
