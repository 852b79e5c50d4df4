#pragma once

#include <cstddef>

#include "umbral/config.hpp"
#include "umbral/result.hpp"

namespace umbral {

/// Stability index alpha and modification order nu of the one-sided stable
/// family. nu = 0 is the stable density itself.
struct LevyParams {
  double alpha = 0.5;
  double nu = 0.0;

  /// Throws DomainError unless 0 < alpha < 1 and nu > -1 (the s^nu weight
  /// must stay integrable at the origin).
  void validate() const;
};

/// A transform computed by quadrature next to its closed form.
struct LaplaceCheck {
  double numeric = 0.0;
  double closed_form = 0.0;
  /// numeric - closed_form
  double residual = 0.0;
  double err_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// x at and above which levy_density sums its series instead of integrating.
inline constexpr double levy_series_threshold = 5.0;

/// One-sided stable density g_alpha(x), x > 0. Below levy_series_threshold:
/// levy_contour_integral; above: levy_density_series.
Estimate levy_density_estimate(double x, double alpha, const EvalConfig& cfg = {});
double levy_density(double x, double alpha, const EvalConfig& cfg = {});

/// -(1/pi) sum_r (-1)^r x^{-alpha r - 1} Gamma(alpha r + 1) sin(pi alpha r) / r!,
/// the umbral image of the weight beta -> Gamma(beta + 1) sin(pi beta).
SeriesResult<double> levy_density_series(double x, double alpha, const EvalConfig& cfg = {});

/// -(1/pi) Im int_0^inf (-s)^nu exp(-s x - (-s)^alpha) ds with the principal
/// branch (-s)^beta = e^{i pi beta} s^beta, integrated along a ray
/// s = r e^{i theta} inside the sector where both exponentials decay, after
/// r = u^{1/(nu+1)} removes the s^nu singularity.
QuadResult levy_contour_integral(double x, const LevyParams& p, const EvalConfig& cfg = {});

/// Rotation angle used by levy_contour_integral: the middle of the sector
/// -pi/2 < theta < min(pi/2, pi/(2 alpha) - pi).
double levy_contour_angle(double alpha);

/// g_{alpha,nu}(x), the contour integral above. The weight carries the same
/// branch phase e^{i pi nu} as the stretched exponent; with it the Laplace
/// transform of g_{alpha,alpha-1} is p^{alpha-1} exp(-p^alpha).
double levy_modified_density(double x, const LevyParams& p, const EvalConfig& cfg = {});

/// The same integral with a bare s^nu weight (no branch phase). Agrees with
/// levy_modified_density only at nu = 0.
double levy_modified_density_literal(double x, const LevyParams& p, const EvalConfig& cfg = {});

/// <x^mu> = Gamma(mu) sin(pi mu) / (sin(pi mu/alpha) Gamma(mu/alpha)) for
/// 0 < mu < alpha < 1. Throws DomainError otherwise.
double levy_moment(double mu, double alpha);

/// int_0^inf x^mu g_alpha(x) dx by quadrature.
QuadResult levy_moment_quadrature(double mu, double alpha, const EvalConfig& cfg = {});

/// int_0^inf e^{-p x} g_alpha(x) dx against exp(-p^alpha). Requires p > 0.
LaplaceCheck levy_laplace(double p, double alpha, const EvalConfig& cfg = {});

/// int_0^inf e^{-p x} g_{alpha, alpha-1}(x) dx against p^{alpha-1} exp(-p^alpha).
LaplaceCheck weibull_laplace_check(double p, double alpha, const EvalConfig& cfg = {});

/// weibull_laplace_check with levy_modified_density_literal in place of the density.
LaplaceCheck weibull_laplace_literal_check(double p, double alpha, const EvalConfig& cfg = {});

} // namespace umbral
