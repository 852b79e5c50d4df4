#include "umbral/fresnel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "umbral/errors.hpp"
#include "umbral/quadrature.hpp"
#include "umbral/special.hpp"

namespace umbral {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double improper_split = 4.0;

double hyp_argument(double x) {
  const double q = pi * x * x / 4.0;
  return -q * q;
}

// int_x^inf f(pi t^2/2) dt for x > 0; sign changes where t^2 = 2k + offset.
QuadResult fresnel_tail(double x, double (*f)(double), double offset, const EvalConfig& cfg) {
  const double first = std::floor((x * x - offset) / 2.0) + 1.0;
  return quad::oscillatory_tail_quad([f](double t) { return f(pi * t * t / 2.0); }, x,
                                     [=](std::size_t k) { return std::sqrt(2.0 * (first + k) + offset); }, cfg);
}

double cos_fn(double v) { return std::cos(v); }
double sin_fn(double v) { return std::sin(v); }

Estimate from_tail(double x, double (*f)(double), double offset, const EvalConfig& cfg) {
  const QuadResult t = fresnel_tail(std::fabs(x), f, offset, cfg);
  const double v = 0.5 - t.value;
  return {x < 0.0 ? -v : v, t.err_estimate, t.evaluations, Method::quadrature};
}

double s_weight_reading(double prefactor) {
  return prefactor * gamma(0.25) * pochhammer(0.75, -0.25) / (pochhammer(1.5, -0.25) * pochhammer(1.75, -0.25));
}

} // namespace

Estimate fresnel_c_estimate(double x, const EvalConfig& cfg) {
  if (!std::isfinite(x)) throw DomainError("fresnel_c: non-finite argument");
  if (std::fabs(x) > fresnel_series_limit) return from_tail(x, cos_fn, 1.0, cfg);
  const SeriesResult<double> h = hyp1f2(0.25, 0.5, 1.25, hyp_argument(x), cfg);
  return {x * h.value, std::fabs(x) * h.err_estimate, h.terms_used, Method::series};
}

double fresnel_c(double x, const EvalConfig& cfg) { return fresnel_c_estimate(x, cfg).value; }

Estimate fresnel_s_estimate(double x, const EvalConfig& cfg) {
  if (!std::isfinite(x)) throw DomainError("fresnel_s: non-finite argument");
  if (std::fabs(x) > fresnel_series_limit) return from_tail(x, sin_fn, 0.0, cfg);
  const double scale = pi / 2.0 * x * x * x / 3.0;
  const SeriesResult<double> h = hyp1f2(0.75, 1.5, 1.75, hyp_argument(x), cfg);
  return {scale * h.value, std::fabs(scale) * h.err_estimate, h.terms_used, Method::series};
}

double fresnel_s(double x, const EvalConfig& cfg) { return fresnel_s_estimate(x, cfg).value; }

FresnelPoint fresnel_point(double x, const EvalConfig& cfg) { return {x, fresnel_c(x, cfg), fresnel_s(x, cfg)}; }

double fresnel_s_improper_integral(const EvalConfig&) { return s_weight_reading(std::sqrt(pi) / 12.0); }

std::vector<ImproperReading> fresnel_improper_readings() {
  std::vector<ImproperReading> out;
  out.push_back({"sine weights, prefactor sqrt(pi)/12", s_weight_reading(std::sqrt(pi) / 12.0),
                 "keeps the factor 1/2 of S(x) = (pi/2)(x^3/3) 1F2(...) through the termwise integration"});
  out.push_back({"sine weights, prefactor sqrt(pi)/6", s_weight_reading(std::sqrt(pi) / 6.0),
                 "closed form as published"});
  ImproperReading cosine{"cosine weights, prefactor sqrt(pi)/6", std::numeric_limits<double>::quiet_NaN(), ""};
  try {
    cosine.value = std::sqrt(pi) / 6.0 * gamma(0.25) * pochhammer(0.25, -0.25) /
                   (pochhammer(0.5, -0.25) * pochhammer(1.25, -0.25));
    cosine.note = "cosine-weight vacuum under the integral";
  } catch (const PoleError& e) {
    cosine.note = std::string("undefined: ") + e.what();
  }
  out.push_back(cosine);
  return out;
}

QuadResult fresnel_s_improper_quadrature(const EvalConfig& cfg) {
  const QuadResult head = quad::adaptive_quad(
      [&](double t) { return t == 0.0 ? pi / 6.0 : fresnel_s(t, cfg) / (t * t * t); }, 0.0, improper_split, cfg);
  const double first = improper_split * improper_split / 2.0 + 1.0; // next zero of sin(pi t^2/2)
  const QuadResult osc = quad::oscillatory_tail_quad(
      [](double t) { return std::sin(pi * t * t / 2.0) / (t * t); }, improper_split,
      [first](std::size_t k) { return std::sqrt(2.0 * (first + k)); }, cfg);
  const double boundary = fresnel_s(improper_split, cfg) / (2.0 * improper_split * improper_split);
  return {head.value + boundary + 0.5 * osc.value, head.err_estimate + 0.5 * osc.err_estimate,
          head.evaluations + osc.evaluations, true};
}

double quartic_gauss_integral(double a) {
  if (!(a > 0.0)) throw DomainError("quartic_gauss_integral: a must be positive");
  return gamma(0.25) * std::pow(a, -0.25) / 4.0;
}

QuadResult quartic_gauss_integral_quadrature(double a, const EvalConfig& cfg) {
  if (!(a > 0.0)) throw DomainError("quartic_gauss_integral_quadrature: a must be positive");
  return quad::semi_infinite_quad([a](double x) { return std::exp(-a * x * x * x * x); }, cfg);
}

} // namespace umbral
