#pragma once

#include <complex>

#include "umbral/config.hpp"
#include "umbral/result.hpp"

namespace umbral {

/// One sample of the Gaussian cosine/sine pair.
struct GaussTrigPoint {
  double x = 0.0;
  double cg = 0.0;
  double sg = 0.0;
};

/// Gaussian cosine, exp(-x^2).
double cg(double x) noexcept;

/// Gaussian sine, (2/sqrt(pi)) F(x) with F the Dawson integral.
Estimate sg_estimate(double x, const EvalConfig& cfg = {});
double sg(double x, const EvalConfig& cfg = {});

/// Raw power series of the Gaussian sine,
/// (2/sqrt(pi)) sum_r (-1)^r (r+1)! (2x)^{2r+1} / (2r+2)!, summed in plain
/// double. Reference path only; throws DomainError for |x| > 3 where the
/// alternating terms cancel beyond double precision.
SeriesResult<double> sg_series(double x, const EvalConfig& cfg = {});

GaussTrigPoint gauss_trig_point(double x, const EvalConfig& cfg = {});

/// cg(x) + i sg(x).
std::complex<double> eg(double x, const EvalConfig& cfg = {});

/// Plasma dispersion function on the real line, i sqrt(pi) eg(x).
std::complex<double> fried_conte_z(double x, const EvalConfig& cfg = {});

/// m-th derivative of sg. |x| <= 3: the resolved umbral series (below);
/// 3 < |x| < 6: the Dawson recurrence; beyond: differentiated asymptotics.
double sg_derivative(unsigned m, double x, const EvalConfig& cfg = {});

/// (2^{m+1}/sqrt(pi)) sum_{r >= ceil((m-1)/2)} (-1)^r (r+1)! (2r+1)! (2x)^{2r+1-m}
///   / ((2r+2)! (2r+1-m)!), in double-double. Throws DomainError for |x| > 3.
SeriesResult<double> sg_derivative_series(unsigned m, double x, const EvalConfig& cfg = {});

/// m-th derivative of sg from F' = 1 - 2xF, F^{(k+1)} = -2(x F^{(k)} + k F^{(k-1)}).
double sg_derivative_recurrence(unsigned m, double x, const EvalConfig& cfg = {});

/// (-1)^m H_m(x) exp(-x^2).
double cg_derivative(unsigned m, double x) noexcept;

/// int_0^x sg. Series -(1/(4 sqrt(pi))) sum_{r>=1} (-1)^r (2x)^{2r} (r-1)! / (r (2r-1)!)
/// for |x| <= 4; the value at 4 plus adaptive quadrature of sg beyond.
Estimate sg_antiderivative_estimate(double x, const EvalConfig& cfg = {});
double sg_antiderivative(double x, const EvalConfig& cfg = {});

/// int_0^x exp(-t^2) dt. Series sum_r (-1)^r x^{2r+1} / ((2r+1) r!) for
/// |x| <= 3, (sqrt(pi)/2) erf(x) beyond.
Estimate gauss_primitive_estimate(double x, const EvalConfig& cfg = {});
double gauss_primitive(double x, const EvalConfig& cfg = {});

/// sg(x) + (1/pi) PV int cg(t) / (t - x) dt over |t - x| <= 30.
/// Its magnitude measures how well the Kramers-Kronig pair closes.
double kk_residual(double x, const EvalConfig& cfg = {});

/// Parametric Gaussian sine (2/sqrt(pi)) x exp(-x^2) 1F1(1/2; 3/2; alpha x^2).
/// alpha = 1 gives sg. Uses the 1F1 series while alpha x^2 <= 50 and the
/// equivalent Dawson/erf form past it.
double sg_alpha(double x, double alpha, const EvalConfig& cfg = {});

/// int_0^inf sg_alpha(x, alpha) dx = (1/sqrt(pi)) 2F1(1/2, 1; 3/2; alpha).
/// Throws DomainError for |alpha| >= 1.
double sg_alpha_integral(double alpha, const EvalConfig& cfg = {});

/// Semi-infinite quadrature of sg_alpha(., alpha).
QuadResult sg_alpha_integral_quadrature(double alpha, const EvalConfig& cfg = {});

/// int_{-inf}^{inf} sg(x)/x dx by its closed form 2 * 2F1(1/2, 1/2; 3/2; 1) = pi.
double sg_over_x_integral(const EvalConfig& cfg = {});

/// Whole-line quadrature of sg(x)/x.
QuadResult sg_over_x_integral_quadrature(const EvalConfig& cfg = {});

} // namespace umbral
