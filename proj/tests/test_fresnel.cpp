#include <cmath>
#include <numbers>

#include "doctest.h"
#include "frozen_values.hpp"
#include "support.hpp"
#include "umbral/errors.hpp"
#include "umbral/fresnel.hpp"
#include "umbral/quadrature.hpp"
#include "umbral/special.hpp"

using namespace umbral;
using support::rel_err;

namespace {
constexpr double pi = std::numbers::pi;
} // namespace

TEST_CASE("Fresnel values") {
  CHECK(fresnel_c(0.0) == 0.0);
  CHECK(fresnel_s(0.0) == 0.0);
  CHECK(rel_err(fresnel_c(1.0), frozen::fresnel_c_1) < 1e-14);
  CHECK(rel_err(fresnel_s(1.0), frozen::fresnel_s_1) < 1e-14);
  for (double x : {1e-3, 1e-2}) CHECK(rel_err(fresnel_s(x) / (x * x * x), pi / 6) < 1e-4);
  CHECK_THROWS_AS(fresnel_c(std::nan("")), DomainError);
}

TEST_CASE("odd symmetry and limits") {
  support::Sampler rng(51);
  for (double x : rng.uniforms(60, 0, 20)) {
    CHECK(fresnel_c(-x) == -fresnel_c(x));
    CHECK(fresnel_s(-x) == -fresnel_s(x));
  }
  for (double x : {8.0, 30.0, 200.0}) {
    CHECK(std::fabs(fresnel_c(x) - 0.5) < 1 / (pi * x));
    CHECK(std::fabs(fresnel_s(x) - 0.5) < 1 / (pi * x));
  }
}

TEST_CASE("hypergeometric path vs quadrature on [0, 4]") {
  for (double x : support::linspace(0.1, 4, 40)) {
    const double qc = quad::adaptive_quad([](double t) { return std::cos(pi * t * t / 2); }, 0, x).value;
    const double qs = quad::adaptive_quad([](double t) { return std::sin(pi * t * t / 2); }, 0, x).value;
    CHECK(std::fabs(fresnel_c(x) - qc) < 1e-9);
    CHECK(std::fabs(fresnel_s(x) - qs) < 1e-9);
  }
}

TEST_CASE("derivative laws") {
  for (double x : support::linspace(0.2, 9, 45)) {
    const double dc = support::central_difference([](double u) { return fresnel_c(u); }, x, 1e-3);
    const double ds = support::central_difference([](double u) { return fresnel_s(u); }, x, 1e-3);
    CHECK(std::fabs(dc - std::cos(pi * x * x / 2)) < 1e-6);
    CHECK(std::fabs(ds - std::sin(pi * x * x / 2)) < 1e-6);
  }
}

TEST_CASE("paths meet at the series limit") {
  const double edge = fresnel_series_limit;
  CHECK(std::fabs(fresnel_c(std::nextafter(edge, 0.0)) - fresnel_c(std::nextafter(edge, 10.0))) < 1e-10);
  CHECK(std::fabs(fresnel_s(std::nextafter(edge, 0.0)) - fresnel_s(std::nextafter(edge, 10.0))) < 1e-10);
}

TEST_CASE("improper integral of S(x)/x^3") {
  const double closed = fresnel_s_improper_integral();
  CHECK(rel_err(closed, frozen::fresnel_improper) < 1e-13);
  CHECK(rel_err(closed, pi / 4) < 1e-13);
  CHECK(rel_err(fresnel_s_improper_quadrature().value, closed) < 1e-5);
  // the three Gamma-ratio expansion of the closed form
  const double expanded = std::sqrt(pi) / 12 * umbral::gamma(0.25) * umbral::gamma(0.5) * umbral::gamma(1.5) * umbral::gamma(1.75) /
                          (umbral::gamma(0.75) * umbral::gamma(1.25) * umbral::gamma(1.5));
  CHECK(rel_err(closed, expanded) < 1e-13);

  const auto readings = fresnel_improper_readings();
  REQUIRE(readings.size() == 3);
  CHECK(rel_err(readings[0].value, closed) < 1e-15);
  CHECK(rel_err(readings[1].value, 2 * closed) < 1e-14);
  CHECK(std::isnan(readings[2].value));
}

TEST_CASE("quartic Gaussian integral") {
  CHECK(rel_err(quartic_gauss_integral(1.0), frozen::quartic_1) < 1e-14);
  CHECK(rel_err(quartic_gauss_integral(0.5), frozen::quartic_0_5) < 1e-14);
  support::Sampler rng(52);
  for (double a : rng.uniforms(20, 0.01, 50)) {
    CHECK(rel_err(quartic_gauss_integral(16 * a), quartic_gauss_integral(a) / 2) < 1e-14);
    CHECK(rel_err(quartic_gauss_integral_quadrature(a).value, quartic_gauss_integral(a)) < 1e-10);
  }
  CHECK_THROWS_AS(quartic_gauss_integral(0.0), DomainError);
}
