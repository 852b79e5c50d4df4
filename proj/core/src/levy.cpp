#include "umbral/levy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "umbral/errors.hpp"
#include "umbral/quadrature.hpp"
#include "umbral/special.hpp"
#include "umbral/weights.hpp"

namespace umbral {
namespace {

constexpr double pi = std::numbers::pi;

void require_alpha(const char* what, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream msg;
    msg << what << ": alpha = " << alpha << " must lie in (0, 1)";
    throw DomainError(msg.str());
  }
}

void require_positive(const char* what, const char* name, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << what << ": " << name << " = " << v << " must be positive and finite";
    throw DomainError(msg.str());
  }
}

LaplaceCheck make_check(const QuadResult& q, double closed) {
  return {q.value, closed, q.value - closed, q.err_estimate, q.evaluations};
}

} // namespace

void LevyParams::validate() const {
  require_alpha("LevyParams", alpha);
  if (!(nu > -1.0) || !std::isfinite(nu)) {
    std::ostringstream msg;
    msg << "LevyParams: nu = " << nu << " must be finite and > -1";
    throw DomainError(msg.str());
  }
}

double levy_contour_angle(double alpha) {
  require_alpha("levy_contour_angle", alpha);
  const double upper = std::min(pi / 2.0, pi / (2.0 * alpha) - pi);
  return 0.5 * (-pi / 2.0 + upper);
}

namespace {

QuadResult contour(double x, const LevyParams& p, bool branch_phase, const EvalConfig& cfg) {
  p.validate();
  require_positive("levy_contour_integral", "x", x);
  const double theta = levy_contour_angle(p.alpha);
  const double k = 1.0 / (p.nu + 1.0);
  const double phase = branch_phase ? pi * p.nu : 0.0;
  const std::complex<double> front = std::polar(k, theta * (1.0 + p.nu) + phase);
  const std::complex<double> lin = x * std::polar(1.0, theta);
  const std::complex<double> stretch = std::polar(1.0, p.alpha * (pi + theta));
  const double alpha = p.alpha;
  QuadResult r = quad::semi_infinite_quad(
      [&](double u) {
        const double rr = k == 1.0 ? u : std::pow(u, k);
        const std::complex<double> e = std::exp(-lin * rr - stretch * std::pow(rr, alpha));
        return (front * e).imag();
      },
      cfg);
  r.value *= -1.0 / pi;
  r.err_estimate /= pi;
  return r;
}

} // namespace

QuadResult levy_contour_integral(double x, const LevyParams& p, const EvalConfig& cfg) {
  return contour(x, p, true, cfg);
}

double levy_modified_density_literal(double x, const LevyParams& p, const EvalConfig& cfg) {
  return contour(x, p, false, cfg).value;
}

SeriesResult<double> levy_density_series(double x, double alpha, const EvalConfig& cfg) {
  require_alpha("levy_density_series", alpha);
  require_positive("levy_density_series", "x", x);
  SeriesResult<double> s = umbral_exp(scaled(levy_weight(), alpha), -std::pow(x, -alpha), 0.0, cfg);
  const double scale = -1.0 / (pi * x);
  s.value *= scale;
  s.err_estimate *= -scale;
  return s;
}

Estimate levy_density_estimate(double x, double alpha, const EvalConfig& cfg) {
  require_alpha("levy_density", alpha);
  require_positive("levy_density", "x", x);
  if (x >= levy_series_threshold) {
    const SeriesResult<double> s = levy_density_series(x, alpha, cfg);
    return {s.value, s.err_estimate, s.terms_used, Method::series};
  }
  const QuadResult q = levy_contour_integral(x, {alpha, 0.0}, cfg);
  return {q.value, q.err_estimate, q.evaluations, Method::quadrature};
}

double levy_density(double x, double alpha, const EvalConfig& cfg) {
  return levy_density_estimate(x, alpha, cfg).value;
}

double levy_modified_density(double x, const LevyParams& p, const EvalConfig& cfg) {
  return levy_contour_integral(x, p, cfg).value;
}

double levy_moment(double mu, double alpha) {
  require_alpha("levy_moment", alpha);
  if (!(mu > 0.0 && mu < alpha)) {
    std::ostringstream msg;
    msg << "levy_moment: <x^mu> is defined only for 0 < mu < alpha (mu = " << mu << ", alpha = " << alpha << ")";
    throw DomainError(msg.str());
  }
  const double ratio = mu / alpha;
  return gamma(mu) * sin_pi(mu) / (sin_pi(ratio) * gamma(ratio));
}

QuadResult levy_moment_quadrature(double mu, double alpha, const EvalConfig& cfg) {
  require_alpha("levy_moment_quadrature", alpha);
  return quad::semi_infinite_quad([&](double x) { return x == 0.0 ? 0.0 : std::pow(x, mu) * levy_density(x, alpha, cfg); },
                                  cfg);
}

LaplaceCheck levy_laplace(double p, double alpha, const EvalConfig& cfg) {
  require_alpha("levy_laplace", alpha);
  require_positive("levy_laplace", "p", p);
  const QuadResult q = quad::semi_infinite_quad(
      [&](double x) { return x == 0.0 ? 0.0 : std::exp(-p * x) * levy_density(x, alpha, cfg); }, cfg);
  return make_check(q, std::exp(-std::pow(p, alpha)));
}

namespace {

template <class Density>
LaplaceCheck weibull_check(const char* what, double p, double alpha, Density density, const EvalConfig& cfg) {
  require_alpha(what, alpha);
  require_positive(what, "p", p);
  const LevyParams params{alpha, alpha - 1.0};
  const QuadResult q = quad::semi_infinite_quad(
      [&](double x) { return x == 0.0 ? 0.0 : std::exp(-p * x) * density(x, params, cfg); }, cfg);
  return make_check(q, std::pow(p, alpha - 1.0) * std::exp(-std::pow(p, alpha)));
}

} // namespace

LaplaceCheck weibull_laplace_check(double p, double alpha, const EvalConfig& cfg) {
  return weibull_check("weibull_laplace_check", p, alpha, levy_modified_density, cfg);
}

LaplaceCheck weibull_laplace_literal_check(double p, double alpha, const EvalConfig& cfg) {
  return weibull_check("weibull_laplace_literal_check", p, alpha, levy_modified_density_literal, cfg);
}

} // namespace umbral
