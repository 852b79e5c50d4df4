#include <cmath>
#include <numbers>

#include "doctest.h"
#include "frozen_values.hpp"
#include "support.hpp"
#include "umbral/errors.hpp"
#include "umbral/special.hpp"

using namespace umbral;
using support::rel_err;

TEST_CASE("gamma: values, reflection and poles") {
  CHECK(umbral::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rel_err(umbral::gamma(5.0), 24.0) < 1e-14);
  CHECK(rel_err(umbral::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(rel_err(umbral::gamma(0.75), frozen::gamma_0_75) < 1e-14);
  CHECK(rel_err(umbral::gamma(-0.5), -2.0 * std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK_THROWS_AS(umbral::gamma(0.0), PoleError);
  CHECK_THROWS_AS(umbral::gamma(-1.0), PoleError);
  CHECK_THROWS_AS(umbral::gamma(-7.0), PoleError);
  CHECK_THROWS_AS(log_abs_gamma(-2.0), PoleError);
}

TEST_CASE("gamma: recurrence and log form on random arguments") {
  support::Sampler rng(11);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(-9.5, 40.0);
    if (std::fabs(x - std::round(x)) < 1e-3 && x <= 0) continue;
    CHECK(rel_err(umbral::gamma(x + 1.0), x * umbral::gamma(x)) < 2e-13);
    CHECK(std::fabs(log_abs_gamma(x) - std::log(std::fabs(umbral::gamma(x)))) < 1e-12 * std::max(1.0, std::fabs(log_abs_gamma(x))));
  }
}

TEST_CASE("sin_pi is exact at integers and half-integers") {
  for (int k = -20; k <= 20; ++k) {
    CHECK(sin_pi(static_cast<double>(k)) == 0.0);
    CHECK(std::fabs(sin_pi(k + 0.5)) == 1.0);
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.0, 0.0) == 1.0);
  CHECK(pochhammer(3.0, 4.0) == 3.0 * 4.0 * 5.0 * 6.0);
  CHECK(rel_err(pochhammer(1.5, -0.25), frozen::poch_1_5_m0_25) < 1e-14);
  CHECK(pochhammer(-2.0, 5.0) == 0.0);
  CHECK(rel_err(pochhammer(200.5, 0.5), std::exp(log_abs_gamma(201.0) - log_abs_gamma(200.5))) < 1e-12);
  CHECK_THROWS_AS(pochhammer(0.75, -0.75), PoleError);
}

TEST_CASE("hermite polynomials") {
  CHECK(hermite_two_var(0, 0.3, -2.0) == 1.0);
  CHECK(rel_err(hermite_two_var(4, 1.0, -1.0), frozen::hermite2_4_1_m1) < 1e-15);
  CHECK(rel_err(hermite_classical(3, 0.7), frozen::hermite_3_0_7) < 1e-14);
  CHECK(hermite_classical(1, 0.4) == doctest::Approx(0.8));

  SUBCASE("three-term recurrence") {
    support::Sampler rng(12);
    for (int i = 0; i < 100; ++i) {
      const double x = rng.uniform(-3, 3);
      const unsigned n = rng.integer(1, 20);
      const double lhs = hermite_classical(n + 1, x);
      const double a = 2 * x * hermite_classical(n, x), b = 2.0 * n * hermite_classical(n - 1, x);
      // the explicit sum alternates; its rounding scales with the sum of |terms|
      const double scale = std::max(hermite_two_var(n + 1, 2 * std::fabs(x), 1.0), 2.0 * n * hermite_two_var(n - 1, 2 * std::fabs(x), 1.0));
      CHECK(std::fabs(lhs - (a - b)) <= 1e-13 * std::max({1.0, scale, std::fabs(a), std::fabs(b)}));
    }
  }
  SUBCASE("generating function partial sums") {
    const double x = 0.4, y = -0.3, t = 0.25;
    double sum = 0, power = 1;
    for (unsigned n = 0; n <= 30; ++n) {
      sum += power * hermite_two_var(n, x, y);
      power *= t / (n + 1.0);
    }
    CHECK(rel_err(sum, std::exp(x * t + y * t * t)) < 1e-15);
  }
}

TEST_CASE("dawson and erfi") {
  CHECK(dawson(0.0) == 0.0);
  CHECK(rel_err(dawson(1.0), frozen::dawson_1) < 1e-14);
  CHECK(rel_err(erfi(1.0), frozen::erfi_1) < 1e-14);
  CHECK_THROWS_AS(erfi(27.0), OverflowError);
  CHECK(std::isfinite(erfi(erfi_max_argument)));

  support::Sampler rng(13);
  for (int i = 0; i < 300; ++i) {
    const double x = rng.uniform(0, 40);
    CHECK(dawson(-x) == -dawson(x));
    // F' = 1 - 2 x F
    const double h = 1e-3;
    const double fd = support::central_difference([](double u) { return dawson(u); }, x + 0.01, h);
    CHECK(std::fabs(fd - (1 - 2 * (x + 0.01) * dawson(x + 0.01))) < 1e-9);
  }
  SUBCASE("large-x behaviour 1/(2x)") {
    for (double x : {10.0, 100.0, 1e4}) CHECK(rel_err(dawson(x), 1 / (2 * x)) < 1.0 / (x * x));
  }
}

TEST_CASE("hypergeometric series") {
  const EvalConfig tight{1e-17, 1e-300, 500};
  CHECK(hyp1f1(0.5, 1.5, 0.0).value == 1.0);
  CHECK(rel_err(hyp2f1(0.5, 1.0, 1.5, 0.25, tight).value, frozen::hyp2f1_half_1_3half_quarter) < 1e-15);
  CHECK(rel_err(hyp2f1(0.5, 1.0, 1.5, 0.25).value, frozen::hyp2f1_half_1_3half_quarter) < 1e-12);
  CHECK(rel_err(hyp2f1(0.5, 0.5, 1.5, 1.0).value, std::numbers::pi / 2) < 1e-14);
  CHECK(rel_err(1.0 * hyp1f2(0.25, 0.5, 1.25, -std::pow(std::numbers::pi / 4, 2)).value, frozen::hyp1f2_c1) < 1e-14);
  CHECK(rel_err(hyp1f1_derivative(1, 0.5, 1.5, 0.3), frozen::hyp1f1_deriv_1) < 1e-13);
  CHECK_THROWS_AS(hyp2f1(0.5, 1.0, 1.5, 1.5), DomainError);
  CHECK_THROWS_AS(hyp2f1(0.5, 1.0, 1.5, 1.0), DomainError); // c - a - b = 0
  CHECK_THROWS_AS(hyp1f1(1.0, 1.0, 400.0, EvalConfig{1e-12, 1e-14, 8}), ConvergenceError);

  SUBCASE("series result reports its work") {
    const auto r = hyp1f1(0.5, 1.5, 2.0);
    CHECK(r.converged);
    CHECK(r.terms_used > 5);
    CHECK(r.err_estimate < 1e-11 * std::fabs(r.value));
  }
  SUBCASE("Kummer transformation on random arguments") {
    support::Sampler rng(14);
    for (int i = 0; i < 100; ++i) {
      const double a = rng.uniform(-2.5, 3), c = rng.uniform(0.3, 4), x = rng.uniform(-20, 20);
      const double lhs = hyp1f1(a, c, x).value;
      const double rhs = std::exp(x) * hyp1f1(c - a, c, -x).value;
      CHECK(std::fabs(lhs - rhs) <= 1e-10 * std::max({1.0, std::fabs(lhs), std::exp(x)}));
    }
  }
  SUBCASE("2F1 elementary case log((1+x)/(1-x))/(2x)") {
    support::Sampler rng(15);
    for (int i = 0; i < 50; ++i) {
      const double x = rng.uniform(-0.9, 0.9);
      CHECK(rel_err(hyp2f1(0.5, 1.0, 1.5, x * x).value, std::atanh(x) / x) < 1e-12);
      CHECK(rel_err(hyp2f1(0.5, 1.0, 1.5, x * x, tight).value, std::atanh(x) / x) < 1e-14);
    }
  }
}
