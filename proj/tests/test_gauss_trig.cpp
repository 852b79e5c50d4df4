#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "frozen_values.hpp"
#include "support.hpp"
#include "umbral/errors.hpp"
#include "umbral/gauss_trig.hpp"
#include "umbral/quadrature.hpp"
#include "umbral/special.hpp"

using namespace umbral;
using support::rel_err;

namespace {
constexpr double pi = std::numbers::pi;
const double sqrt_pi = std::sqrt(pi);
} // namespace

TEST_CASE("cg") {
  CHECK(cg(0.0) == 1.0);
  CHECK(cg(1.0) == std::exp(-1.0));
  support::Sampler rng(21);
  for (double x : rng.uniforms(100, -10, 10)) CHECK(cg(-x) == cg(x));
}

TEST_CASE("sg") {
  CHECK(sg(0.0) == 0.0);
  CHECK(rel_err(sg(1.0), frozen::sg_1) < 1e-14);
  CHECK(std::fabs(sg_series(1.5).value - sg(1.5)) < 1e-10);
  CHECK_THROWS_AS(sg_series(3.5), DomainError);
  const Estimate e = sg_estimate(1.0);
  CHECK(e.method == Method::series);
  CHECK(sg_estimate(20.0).method == Method::asymptotic);
}

TEST_CASE("eg and the Fried-Conte function") {
  CHECK(eg(0.0) == std::complex<double>(1.0, 0.0));
  CHECK(rel_err(eg(1.0).real(), std::exp(-1.0)) < 1e-15);
  CHECK(rel_err(eg(1.0).imag(), frozen::sg_1) < 1e-14);
  const auto z0 = fried_conte_z(0.0);
  CHECK(z0.real() == 0.0);
  CHECK(rel_err(z0.imag(), sqrt_pi) < 1e-15);
  CHECK(rel_err(fried_conte_z(1.0).real(), -sqrt_pi * frozen::sg_1) < 1e-14);
  for (double x : support::linspace(-5, 5, 41)) {
    CHECK(rel_err(fried_conte_z(x).imag(), sqrt_pi * std::exp(-x * x)) < 1e-15);
    const auto p = gauss_trig_point(x);
    CHECK(p.cg == cg(x));
    CHECK(p.sg == sg(x));
  }
}

TEST_CASE("sg derivatives") {
  support::Sampler rng(22);
  for (double x : rng.uniforms(50, -8, 8)) CHECK(sg_derivative(0, x) == doctest::Approx(sg(x)).epsilon(1e-13));
  CHECK(rel_err(sg_derivative(1, 0.0), 2 / sqrt_pi) < 1e-15);
  CHECK(rel_err(sg_derivative(2, 0.8), frozen::sg_d2_0_8) < 1e-12);
  CHECK_THROWS_AS(sg_derivative_series(2, 3.5), DomainError);

  SUBCASE("each order is the finite difference of the previous one") {
    for (unsigned m = 1; m <= 4; ++m) {
      double diff = 0, scale = 0;
      for (double x : support::linspace(-2, 2, 81)) {
        const double fd = support::central_difference([&](double u) { return sg_derivative(m - 1, u); }, x, 1e-3);
        diff = std::max(diff, std::fabs(sg_derivative(m, x) - fd));
        scale = std::max(scale, std::fabs(fd));
      }
      CAPTURE(m);
      CHECK(diff / scale < 1e-6);
    }
  }
  SUBCASE("series path equals recurrence path on |x| <= 2") {
    for (unsigned m = 0; m <= 4; ++m) {
      for (double x : support::linspace(-2, 2, 41)) {
        const double s = sg_derivative_series(m, x).value;
        const double r = sg_derivative_recurrence(m, x);
        CHECK(std::fabs(s - r) <= 1e-9 * std::max(1.0, std::fabs(r)));
      }
    }
  }
  SUBCASE("no jump where the evaluation path changes") {
    for (unsigned m = 0; m <= 6; ++m) {
      for (double edge : {3.0, -3.0, 6.0 + m, -6.0 - m}) {
        const double below = sg_derivative(m, std::nextafter(edge, 0.0));
        const double above = sg_derivative(m, std::nextafter(edge, 2 * edge));
        CAPTURE(m);
        CAPTURE(edge);
        CHECK(std::fabs(below - above) <= 1e-9 * std::max(1e-3, std::fabs(below)));
      }
    }
  }
  SUBCASE("parity (-1)^(m+1)") {
    support::Sampler r(23);
    for (int i = 0; i < 100; ++i) {
      const double x = r.uniform(0, 12);
      const unsigned m = r.integer(0, 6);
      const double sign = m % 2 == 0 ? -1.0 : 1.0;
      CHECK(sg_derivative(m, -x) == doctest::Approx(sign * sg_derivative(m, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("cg derivatives") {
  support::Sampler rng(24);
  for (double x : rng.uniforms(50, -4, 4)) {
    CHECK(cg_derivative(0, x) == doctest::Approx(std::exp(-x * x)).epsilon(1e-15));
    CHECK(cg_derivative(1, x) == doctest::Approx(-2 * x * std::exp(-x * x)).epsilon(1e-14));
  }
  CHECK(rel_err(cg_derivative(3, 0.5), frozen::cg_d3_0_5) < 1e-13);
  for (unsigned m = 1; m <= 4; ++m) {
    double diff = 0, scale = 0;
    for (double x : support::linspace(-2, 2, 81)) {
      const double fd = support::central_difference([&](double u) { return cg_derivative(m - 1, u); }, x, 1e-3);
      diff = std::max(diff, std::fabs(cg_derivative(m, x) - fd));
      scale = std::max(scale, std::fabs(fd));
    }
    CHECK(diff / scale < 1e-6);
  }
}

TEST_CASE("antiderivative of sg") {
  CHECK(sg_antiderivative(0.0) == 0.0);
  CHECK(rel_err(sg_antiderivative(1.0), frozen::sg_anti_1) < 1e-14);
  support::Sampler rng(25);
  for (double x : rng.uniforms(40, 0.05, 9)) {
    CHECK(sg_antiderivative(-x) == sg_antiderivative(x));
    const double fd = support::central_difference([](double u) { return sg_antiderivative(u); }, x, 1e-3);
    CHECK(std::fabs(fd - sg(x)) < 1e-9);
  }
  // the series at 4 and the quadrature continuation agree
  CHECK(std::fabs(sg_antiderivative(std::nextafter(4.0, 0.0)) - sg_antiderivative(std::nextafter(4.0, 5.0))) < 1e-12);
}

TEST_CASE("Gaussian primitive") {
  CHECK(gauss_primitive(0.0) == 0.0);
  CHECK(std::fabs(gauss_primitive(6.0) - sqrt_pi / 2) < 1e-12);
  CHECK(rel_err(gauss_primitive(1.0), frozen::gauss_prim_1) < 1e-14);
  for (double x : support::linspace(-3, 3, 61)) {
    CHECK(std::fabs(gauss_primitive(x) - sqrt_pi / 2 * std::erf(x)) < 1e-13);
  }
}

TEST_CASE("Kramers-Kronig residual") {
  CHECK(std::fabs(kk_residual(0.0)) < 1e-6);
  for (double x : {0.5, 1.0, 2.0}) CHECK(std::fabs(kk_residual(x)) < 1e-4);
  // the opposite sign convention leaves twice sg behind
  const double x = 1.0;
  CHECK(std::fabs(kk_residual(x) - 2 * sg(x)) > 1.0);
}

TEST_CASE("parametric Gaussian sine and its integrals") {
  for (double x : support::linspace(-4, 4, 33)) CHECK(sg_alpha(x, 1.0) == doctest::Approx(sg(x)).epsilon(1e-12));
  CHECK(rel_err(sg_alpha_integral(0.0), 1 / sqrt_pi) < 1e-15);
  CHECK(rel_err(sg_alpha_integral(0.5), frozen::sg_alpha_0_5) < 1e-12);
  CHECK(rel_err(sg_alpha_integral(0.5, EvalConfig{1e-17, 1e-300, 500}), frozen::sg_alpha_0_5) < 1e-15);
  for (double a : {-0.5, 0.25, 0.5, 0.75}) {
    CHECK(rel_err(sg_alpha_integral_quadrature(a).value, sg_alpha_integral(a)) < 1e-7);
  }
  CHECK_THROWS_AS(sg_alpha_integral(1.0), DomainError);
  CHECK_THROWS_AS(sg_alpha_integral(-1.5), DomainError);
  CHECK(rel_err(sg_over_x_integral(), pi) < 1e-14);
  CHECK(rel_err(sg_over_x_integral_quadrature().value, pi) < 1e-6);
  SUBCASE("1F1 form and Dawson form meet at the switch") {
    for (double a : {0.3, 0.9, -0.7}) {
      const double x = std::sqrt(50.0 / std::fabs(a));
      CHECK(rel_err(sg_alpha(std::nextafter(x, 0.0), a), sg_alpha(std::nextafter(x, 2 * x), a)) < 1e-10);
    }
  }
}

TEST_CASE("Gaussian trigonometric identity") {
  for (double x : support::linspace(-3, 3, 200)) {
    const double c = cg(x), s = sg(x), e = erfi(x);
    CHECK(std::fabs(c * c + s * s - std::exp(-2 * x * x) * (1 + e * e)) < 1e-10);
  }
}

TEST_CASE("parity of cg, sg and the antiderivative") {
  support::Sampler rng(26);
  for (double x : rng.uniforms(200, 0, 30)) {
    CHECK(cg(-x) == cg(x));
    CHECK(sg(-x) == -sg(x));
  }
}

TEST_CASE("curve (cg, sg) returns to the origin") {
  // sg decays like 1/(sqrt(pi) x), so the end of the egg-shaped curve is
  // approached slowly; at |x| = 6 the norm is still about 0.094.
  double previous = 1.0;
  for (double x : {6.0, 12.0, 60.0, 600.0, 6000.0}) {
    const double norm = std::hypot(cg(x), sg(x));
    CHECK(norm == doctest::Approx(std::hypot(cg(-x), sg(-x))));
    CHECK(norm < previous);
    CHECK(std::fabs(sqrt_pi * x * sg(x) - 1) < 1 / (x * x));
    previous = norm;
  }
  CHECK(std::hypot(cg(6.0), sg(6.0)) == doctest::Approx(0.0944).epsilon(1e-2));
}
