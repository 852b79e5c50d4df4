#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "frozen_values.hpp"
#include "support.hpp"
#include "umbral/errors.hpp"
#include "umbral/levy.hpp"
#include "umbral/quadrature.hpp"

using namespace umbral;
using support::rel_err;

namespace {
const double sqrt_pi = std::sqrt(std::numbers::pi);
double smirnov(double x) { return std::pow(x, -1.5) * std::exp(-0.25 / x) / (2 * sqrt_pi); }
} // namespace

TEST_CASE("stable density values") {
  CHECK(rel_err(levy_density(1.0, 0.5), frozen::levy_1_0_5) < 1e-12);
  CHECK(rel_err(levy_density(1.0, 0.5), smirnov(1.0)) < 1e-12);
  CHECK(rel_err(levy_density(10.0, 0.7), frozen::levy_10_0_7) < 1e-12);
  CHECK(rel_err(levy_contour_integral(10.0, {0.7, 0.0}).value, levy_density_series(10.0, 0.7).value) < 1e-6);
  CHECK(levy_density_estimate(4.0, 0.5).method == Method::quadrature);
  CHECK(levy_density_estimate(5.0, 0.5).method == Method::series);
}

TEST_CASE("stable density domain errors") {
  CHECK_THROWS_AS(levy_density(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(levy_density(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(levy_density(-1.0, 0.5), DomainError);
  CHECK_THROWS_AS(levy_contour_integral(1.0, {0.5, -1.0}), DomainError);
  CHECK_THROWS_AS(levy_moment(0.6, 0.5), DomainError);
  CHECK_THROWS_AS(levy_laplace(0.0, 0.5), DomainError);
}

TEST_CASE("Levy-Smirnov case on [0.05, 20]") {
  for (double x : support::linspace(0.05, 20, 60)) CHECK(rel_err(levy_density(x, 0.5), smirnov(x)) < 1e-7);
}

TEST_CASE("series and contour agree on [5, 50]") {
  for (double a : {0.3, 0.5, 0.7}) {
    for (double x : support::linspace(5, 50, 19)) {
      CAPTURE(a);
      CAPTURE(x);
      CHECK(rel_err(levy_density_series(x, a).value, levy_contour_integral(x, {a, 0.0}).value) < 1e-6);
    }
  }
}

TEST_CASE("positivity and unit mass") {
  for (double a : {0.3, 0.5, 0.7}) {
    for (double x : support::linspace(0.1, 100, 120)) CHECK(levy_density(x, a) >= -1e-10);
    const auto mass = quad::semi_infinite_quad([a](double x) { return x == 0.0 ? 0.0 : levy_density(x, a); });
    CHECK(std::fabs(mass.value - 1) < 1e-5);
  }
}

TEST_CASE("Laplace transform is the stretched exponential") {
  for (double p : {0.5, 1.0, 2.0}) {
    for (double a : {0.3, 0.5, 0.7}) {
      const LaplaceCheck c = levy_laplace(p, a);
      CHECK(c.closed_form == std::exp(-std::pow(p, a)));
      CHECK(std::fabs(c.residual) <= 1e-5);
    }
  }
  CHECK(rel_err(levy_laplace(1.0, 0.5).numeric, std::exp(-1.0)) < 1e-10);
  CHECK(rel_err(levy_laplace(2.0, 0.7).numeric, frozen::levy_laplace_2_0_7) < 1e-10);
  CHECK(std::fabs(levy_laplace(1e-6, 0.5).numeric - 1) < 2e-3);
}

TEST_CASE("fractional moments") {
  CHECK(rel_err(levy_moment(0.3, 0.7), frozen::levy_moment_0_3_0_7) < 1e-13);
  for (auto [mu, a] : {std::pair{0.2, 0.5}, std::pair{0.3, 0.7}}) {
    CHECK(rel_err(levy_moment_quadrature(mu, a).value, levy_moment(mu, a)) < 1e-4);
  }
  CHECK(levy_moment(0.49, 0.5) > 10.0);
  CHECK(std::isfinite(levy_moment(0.49, 0.5)));
}

TEST_CASE("modified density and the Weibull transform") {
  for (double x : {0.5, 2.0, 7.0}) {
    CHECK(rel_err(levy_modified_density(x, {0.6, 0.0}), levy_density(x, 0.6)) < 1e-10);
    CHECK(rel_err(levy_modified_density_literal(x, {0.6, 0.0}), levy_density(x, 0.6)) < 1e-10);
  }
  const LaplaceCheck w1 = weibull_laplace_check(1.0, 0.5);
  CHECK(rel_err(w1.closed_form, std::exp(-1.0)) < 1e-15);
  CHECK(std::fabs(w1.residual) <= 1e-5);
  const LaplaceCheck w4 = weibull_laplace_check(4.0, 0.5);
  CHECK(rel_err(w4.closed_form, std::exp(-2.0) / 2) < 1e-15);
  CHECK(std::fabs(w4.residual) <= 1e-5);
  CHECK(rel_err(w4.numeric, frozen::weibull_4_0_5) < 1e-10);
  // Without the branch phase the transform misses the closed form.
  CHECK(std::fabs(weibull_laplace_literal_check(1.0, 0.5).residual) > 1e-2);
  double previous = 1.0;
  for (double p : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    const double v = weibull_laplace_check(p, 0.5).numeric;
    CHECK(v < previous);
    previous = v;
  }
}

TEST_CASE("contour angle lies inside the decay sector") {
  support::Sampler rng(41);
  for (double a : rng.uniforms(50, 0.01, 0.99)) {
    const double t = levy_contour_angle(a);
    const double pi = std::numbers::pi;
    CHECK(t > -pi / 2);
    CHECK(t < std::min(pi / 2, pi / (2 * a) - pi));
    CHECK(std::cos(t) > 0);
    CHECK(std::cos(a * (pi + t)) > 0);
  }
}
