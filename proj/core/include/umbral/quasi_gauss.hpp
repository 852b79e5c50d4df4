#pragma once

#include <string>

#include "umbral/config.hpp"
#include "umbral/result.hpp"

namespace umbral {

/// Tail order n, scale sigma and moment shift d of the quasi-Gaussian family.
struct QuasiGaussParams {
  unsigned n = 1;
  double sigma = 1.0;
  double d = 0.0;

  /// Throws DomainError unless n >= 1 and sigma > 0.
  void validate() const;
};

struct MomentResult {
  /// +inf when the moment diverges.
  double value = 0.0;
  bool finite = true;
  /// The finiteness condition (m+1)/(2n) < 1 with this m and n substituted.
  std::string condition;
};

/// e(-x^2|n) = sum_r (-1)^r Gamma(r/n + 1) x^{2r} / r!
///           = int_0^inf exp(-s - x^2 s^{1/n}) ds.
/// The series is used for |x| <= quasi_gauss_switch(n), quadrature beyond.
Estimate quasi_gauss_estimate(double x, unsigned n, const EvalConfig& cfg = {});
double quasi_gauss(double x, unsigned n, const EvalConfig& cfg = {});

/// Series route alone, with the largest term magnitude reached.
struct QuasiSeries {
  SeriesResult<double> result;
  double peak = 0.0;
};
QuasiSeries quasi_gauss_series(double x, unsigned n, const EvalConfig& cfg = {});

/// Quadrature route alone: int_0^inf exp(-s + z s^{1/n}) ds, i.e. e(z|n) for
/// real z (z = -x^2 for the quasi-Gaussian itself). For n = 1 requires z < 1.
QuadResult quasi_exp_quadrature(double z, unsigned n, const EvalConfig& cfg = {});

/// Largest |x| (on a 0.01 grid) up to which the series converges with its
/// largest term no more than 1e6 times the result. Computed once per n on
/// first use with the default configuration.
double quasi_gauss_switch(unsigned n);

/// int e(-x^2|n) dx over the real line, sqrt(pi) Gamma(1 - 1/(2n)).
double quasi_gauss_integral(unsigned n);

/// The same integral by nested quadrature of the integral representation.
QuadResult quasi_gauss_integral_quadrature(unsigned n, const EvalConfig& cfg = {});

/// e_nu(x|n) = sum_r x^r / r! Gamma((r + nu)/n + 1).
SeriesResult<double> e_nu(double x, double nu, unsigned n, const EvalConfig& cfg = {});

/// int e(-a x^2 + b x|n) dx = sqrt(pi/a) e_{-1/2}(b^2/(4a)|n). Throws DomainError for a <= 0.
double quasi_gauss_quadratic_integral(double a, double b, unsigned n, const EvalConfig& cfg = {});

/// Whole-line quadrature of e(-a x^2 + b x|n) through quasi_exp_quadrature.
QuadResult quasi_gauss_quadratic_integral_quadrature(double a, double b, unsigned n, const EvalConfig& cfg = {});

/// H_m(x, y|n) = m! sum_r x^{m-2r} y^r Gamma((m-r)/n + 1) / ((m-2r)! r!).
/// Generating function: sum_m t^m/m! H_m(x, y|n) = e(x t + y t^2|n).
double hermite_like(unsigned m, double x, double y, unsigned n) noexcept;

/// e(z|n) for real z by its series, sum_k Gamma(k/n + 1) z^k / k!.
SeriesResult<double> quasi_exp_series(double z, unsigned n, const EvalConfig& cfg = {});

/// F(x; sigma|n) = e(-x^2/(2 sigma^2)|n) / (sqrt(2 pi) Gamma(1 - 1/(2n)) sigma).
double density(double x, const QuasiGaussParams& p, const EvalConfig& cfg = {});

/// M_(m,d) = int (x + d)^m F(x; sigma|n) dx in closed form,
/// (m!/Gamma(c)) sum_{r <= m/2} d^{m-2r} sigma^{2r} Gamma(c - r/n) / (2^r r! (m-2r)!),
/// c = 1 - 1/(2n). Divergent exactly when (m+1)/(2n) >= 1.
MomentResult moment(unsigned m, const QuasiGaussParams& p, const EvalConfig& cfg = {});

/// d = 0 moment in the single-Gamma form
/// (m!/(Gamma(c) Gamma(m/2 + 1))) (sigma^2/2)^{m/2} Gamma(c - m/(2n)) for even m;
/// zero for odd m. Same finiteness rule as `moment`.
MomentResult central_moment(unsigned m, unsigned n, double sigma);

/// int (x + d)^m F(x; sigma|n) dx by whole-line quadrature. Meaningful only
/// when the moment is finite.
QuadResult moment_quadrature(unsigned m, const QuasiGaussParams& p, const EvalConfig& cfg = {});

/// The same integrand over [-window, window] only; grows without bound in
/// `window` when the moment diverges.
QuadResult moment_window_quadrature(unsigned m, const QuasiGaussParams& p, double window,
                                    const EvalConfig& cfg = {});

/// m-th x-derivative of e(-x^2|n) as int_0^inf e^{-s} H_m(-2x s^{1/n}, -s^{1/n}) exp(-x^2 s^{1/n}) ds.
double quasi_gauss_derivative(unsigned m, double x, unsigned n, const EvalConfig& cfg = {});

/// I(alpha) = int int exp(-s - x^2 s^alpha) ds dx = sqrt(pi) Gamma(1 - alpha/2).
/// Throws DomainError for alpha >= 2.
double i_alpha(double alpha);

/// I(alpha) by nested quadrature, for 0 <= alpha < 2.
QuadResult i_alpha_quadrature(double alpha, const EvalConfig& cfg = {});

} // namespace umbral
