#include "umbral/gauss_trig.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dawson_detail.hpp"
#include "series.hpp"
#include "umbral/errors.hpp"
#include "umbral/quadrature.hpp"
#include "umbral/special.hpp"

namespace umbral {
namespace {

using detail::DoubleDouble;

constexpr double two_over_sqrt_pi = std::numbers::inv_sqrtpi * 2.0;
constexpr double series_limit = 3.0;
constexpr double antiderivative_series_limit = 4.0;
constexpr double kk_window = 30.0;
constexpr double sg_alpha_series_limit = 50.0;

void require_series_range(const char* what, double x, double limit) {
  if (!(std::fabs(x) <= limit)) {
    std::ostringstream msg;
    msg << what << ": |x| = " << std::fabs(x) << " is outside the series range |x| <= " << limit;
    throw DomainError(msg.str());
  }
}

// m-th derivative of the Dawson function for x > 0 from F(x) = int_0^x e^{-u(2x-u)} du.
// Differentiating under the integral gives
//   F^(m)(x) = int_0^x (-2u)^m e^{-u(2x-u)} du + sum_{j<m} d^{m-1-j}/dx^{m-1-j} [(-2x)^j e^{-x^2}],
// with a one-signed integrand, so the result keeps its relative accuracy where the
// forward derivative recurrence loses digits.
double dawson_derivative_integral(unsigned m, double x, const EvalConfig& cfg) {
  EvalConfig q = cfg;
  q.quad_rel_tol = std::fmin(cfg.quad_rel_tol, cfg.rel_tol);
  const double tail =
      quad::adaptive_quad([m, x](double u) { return std::pow(-2.0 * u, m) * std::exp(u * (u - 2.0 * x)); }, 0.0, x, q)
          .value;
  double boundary = 0.0;
  for (unsigned j = 0; j < m; ++j) {
    const unsigned p = m - 1 - j;
    double binom = 1.0; // C(p, i)
    for (unsigned i = 0; i <= p; ++i) {
      const unsigned s = p - i; // order of the derivative falling on (-2x)^j
      if (s <= j) {
        double falling = 1.0;
        for (unsigned k = 0; k < s; ++k) falling *= static_cast<double>(j - k);
        const double poly = std::pow(-2.0, j) * falling * std::pow(x, j - s);
        const double gauss = (i % 2 == 0 ? 1.0 : -1.0) * hermite_classical(i, x);
        boundary += binom * poly * gauss;
      }
      binom = binom * static_cast<double>(p - i) / static_cast<double>(i + 1);
    }
  }
  return tail + std::exp(-x * x) * boundary;
}

double antiderivative_series(double x, const EvalConfig& cfg, SeriesResult<double>* info) {
  // Terms t_r, r >= 1, of sum (-1)^r (2x)^{2r} (r-1)! / (r (2r-1)!); t_1 = -4x^2.
  const DoubleDouble x2 = detail::two_prod(x, x);
  const auto s = detail::sum_ratio_series(
      DoubleDouble(-4.0) * x2,
      [x2](std::size_t n) {
        const double r = static_cast<double>(n + 1);
        return DoubleDouble(-2.0) * x2 * DoubleDouble(r) / (DoubleDouble(r + 1) * DoubleDouble(2 * r + 1));
      },
      cfg);
  detail::require_converged(s.result, "sg_antiderivative");
  const double scale = -0.25 * std::numbers::inv_sqrtpi;
  if (info) *info = s.result;
  return scale * s.result.value;
}

} // namespace

double cg(double x) noexcept { return std::exp(-x * x); }

Estimate sg_estimate(double x, const EvalConfig& cfg) {
  Estimate e = dawson_estimate(x, cfg);
  e.value *= two_over_sqrt_pi;
  e.err_estimate *= two_over_sqrt_pi;
  return e;
}

double sg(double x, const EvalConfig& cfg) { return sg_estimate(x, cfg).value; }

SeriesResult<double> sg_series(double x, const EvalConfig& cfg) {
  cfg.validate();
  require_series_range("sg_series", x, series_limit);
  // t_0 = x, t_{r+1} / t_r = -2x^2 / (2r + 3)
  double term = x;
  double sum = 0.0;
  int small_run = 0;
  std::size_t used = 0;
  bool converged = false;
  for (std::size_t r = 0; r < cfg.max_terms; ++r) {
    if (r > 0) term *= -2.0 * x * x / (2.0 * static_cast<double>(r) + 1.0);
    sum += term;
    ++used;
    small_run = std::fabs(term) < cfg.term_threshold(std::fabs(sum)) ? small_run + 1 : 0;
    if (small_run >= 2) {
      converged = true;
      break;
    }
  }
  SeriesResult<double> out{two_over_sqrt_pi * sum, 2.0 * two_over_sqrt_pi * std::fabs(term), used, converged};
  return detail::require_converged(out, "sg_series");
}

GaussTrigPoint gauss_trig_point(double x, const EvalConfig& cfg) { return {x, cg(x), sg(x, cfg)}; }

std::complex<double> eg(double x, const EvalConfig& cfg) { return {cg(x), sg(x, cfg)}; }

std::complex<double> fried_conte_z(double x, const EvalConfig& cfg) {
  const double root_pi = std::sqrt(std::numbers::pi);
  return {-root_pi * sg(x, cfg), root_pi * cg(x)};
}

SeriesResult<double> sg_derivative_series(unsigned m, double x, const EvalConfig& cfg) {
  cfg.validate();
  require_series_range("sg_derivative_series", x, series_limit);
  // With k = 2r+1-m the summand reduces to (-1)^r (r!/2) (2x)^k / k!.
  const unsigned r0 = m == 0 ? 0 : m / 2;
  const unsigned k0 = 2 * r0 + 1 - m;
  DoubleDouble first(r0 % 2 == 0 ? 0.5 : -0.5);
  for (unsigned j = 2; j <= r0; ++j) first *= DoubleDouble(static_cast<double>(j));
  for (unsigned j = 1; j <= k0; ++j) first = first * DoubleDouble(2.0 * x) / DoubleDouble(static_cast<double>(j));
  const DoubleDouble four_x2 = DoubleDouble(4.0) * detail::two_prod(x, x);
  auto s = detail::sum_ratio_series(
      first,
      [=](std::size_t n) {
        const double r = static_cast<double>(r0 + n);
        const double k = static_cast<double>(k0 + 2 * n);
        return -(DoubleDouble(r + 1) * four_x2) / (DoubleDouble(k + 1) * DoubleDouble(k + 2));
      },
      cfg);
  detail::require_converged(s.result, "sg_derivative_series");
  const double scale = std::ldexp(std::numbers::inv_sqrtpi, static_cast<int>(m) + 1);
  s.result.value *= scale;
  s.result.err_estimate *= scale;
  return s.result;
}

double sg_derivative_recurrence(unsigned m, double x, const EvalConfig& cfg) {
  double prev = dawson(x, cfg); // F^{(k-1)}
  if (m == 0) return two_over_sqrt_pi * prev;
  double cur = 1.0 - 2.0 * x * prev; // F^{(k)}
  for (unsigned k = 1; k < m; ++k) {
    const double next = -2.0 * (x * cur + static_cast<double>(k) * prev);
    prev = cur;
    cur = next;
  }
  return two_over_sqrt_pi * cur;
}

double sg_derivative(unsigned m, double x, const EvalConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(x)) throw DomainError("sg_derivative: non-finite argument");
  const double ax = std::fabs(x);
  if (ax <= series_limit) return sg_derivative_series(m, x, cfg).value;
  // sg is odd, so its m-th derivative has parity (-1)^{m+1}.
  // The optimally truncated asymptotic expansion loses accuracy with m, so its
  // range starts later for higher derivatives.
  const double asymptotic_start = detail::dawson_series_limit + static_cast<double>(m);
  double v = 0.0;
  if (m == 0) {
    v = two_over_sqrt_pi * dawson(ax, cfg);
  } else if (ax < asymptotic_start) {
    v = two_over_sqrt_pi * dawson_derivative_integral(m, ax, cfg);
  } else {
    v = two_over_sqrt_pi * detail::dawson_asymptotic(m, ax, cfg).value;
  }
  return x < 0.0 && m % 2 == 0 ? -v : v;
}

double cg_derivative(unsigned m, double x) noexcept {
  const double h = hermite_classical(m, x) * cg(x);
  return m % 2 == 0 ? h : -h;
}

Estimate sg_antiderivative_estimate(double x, const EvalConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(x)) throw DomainError("sg_antiderivative: non-finite argument");
  const double ax = std::fabs(x);
  SeriesResult<double> info;
  if (ax <= antiderivative_series_limit) {
    const double v = antiderivative_series(ax, cfg, &info);
    return {v, 0.25 * std::numbers::inv_sqrtpi * info.err_estimate, info.terms_used, Method::series};
  }
  const double base = antiderivative_series(antiderivative_series_limit, cfg, &info);
  const QuadResult q = quad::adaptive_quad([&](double t) { return sg(t, cfg); }, antiderivative_series_limit, ax, cfg);
  return {base + q.value, 0.25 * std::numbers::inv_sqrtpi * info.err_estimate + q.err_estimate,
          info.terms_used + q.evaluations, Method::quadrature};
}

double sg_antiderivative(double x, const EvalConfig& cfg) { return sg_antiderivative_estimate(x, cfg).value; }

Estimate gauss_primitive_estimate(double x, const EvalConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(x)) throw DomainError("gauss_primitive: non-finite argument");
  if (std::fabs(x) > series_limit) {
    return {0.5 * std::sqrt(std::numbers::pi) * std::erf(x), 0.0, 1, Method::closed_form};
  }
  const DoubleDouble x2 = detail::two_prod(x, x);
  const auto s = detail::sum_ratio_series(
      DoubleDouble(x),
      [x2](std::size_t n) {
        const double r = static_cast<double>(n);
        return -(x2 * DoubleDouble(2 * r + 1)) / (DoubleDouble(r + 1) * DoubleDouble(2 * r + 3));
      },
      cfg);
  detail::require_converged(s.result, "gauss_primitive");
  return {s.result.value, s.result.err_estimate, s.result.terms_used, Method::series};
}

double gauss_primitive(double x, const EvalConfig& cfg) { return gauss_primitive_estimate(x, cfg).value; }

double kk_residual(double x, const EvalConfig& cfg) {
  if (!std::isfinite(x)) throw DomainError("kk_residual: non-finite argument");
  const QuadResult pv = quad::principal_value_quad([x](double t) { return cg(t) / (t - x); }, x, kk_window, cfg);
  return sg(x, cfg) + pv.value / std::numbers::pi;
}

double sg_alpha(double x, double alpha, const EvalConfig& cfg) {
  const double arg = alpha * x * x;
  if (std::fabs(arg) <= sg_alpha_series_limit) {
    return two_over_sqrt_pi * x * cg(x) * hyp1f1(0.5, 1.5, arg, cfg).value;
  }
  const double root = std::sqrt(std::fabs(alpha));
  if (alpha > 0.0) {
    // exp(-x^2) erfi(sqrt(alpha) x) / sqrt(alpha), with the exponentials combined.
    return two_over_sqrt_pi * std::exp(-(1.0 - alpha) * x * x) * dawson(root * x, cfg) / root;
  }
  return cg(x) * std::erf(root * x) / root;
}

double sg_alpha_integral(double alpha, const EvalConfig& cfg) {
  if (!(std::fabs(alpha) < 1.0)) {
    std::ostringstream msg;
    msg << "sg_alpha_integral: |alpha| = " << std::fabs(alpha) << " must be < 1";
    throw DomainError(msg.str());
  }
  return std::numbers::inv_sqrtpi * hyp2f1(0.5, 1.0, 1.5, alpha, cfg).value;
}

QuadResult sg_alpha_integral_quadrature(double alpha, const EvalConfig& cfg) {
  if (!(std::fabs(alpha) < 1.0)) throw DomainError("sg_alpha_integral_quadrature: |alpha| must be < 1");
  return quad::semi_infinite_quad([&](double x) { return sg_alpha(x, alpha, cfg); }, cfg);
}

double sg_over_x_integral(const EvalConfig& cfg) { return 2.0 * hyp2f1(0.5, 0.5, 1.5, 1.0, cfg).value; }

QuadResult sg_over_x_integral_quadrature(const EvalConfig& cfg) {
  return quad::whole_line_quad(
      [&](double x) { return x == 0.0 ? two_over_sqrt_pi : sg(x, cfg) / x; }, cfg);
}

} // namespace umbral
