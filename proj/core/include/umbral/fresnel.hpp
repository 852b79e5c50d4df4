#pragma once

#include <string>
#include <vector>

#include "umbral/config.hpp"
#include "umbral/result.hpp"

namespace umbral {

struct FresnelPoint {
  double x = 0.0;
  double c = 0.0;
  double s = 0.0;
};

/// |x| up to which the Fresnel integrals are summed from their 1F2 images.
inline constexpr double fresnel_series_limit = 5.0;

/// C(x) = int_0^x cos(pi t^2/2) dt = x 1F2(1/4; 1/2, 5/4; -(pi x^2/4)^2).
/// Beyond fresnel_series_limit: 1/2 minus the oscillatory tail integral.
Estimate fresnel_c_estimate(double x, const EvalConfig& cfg = {});
double fresnel_c(double x, const EvalConfig& cfg = {});

/// S(x) = int_0^x sin(pi t^2/2) dt = (pi/2)(x^3/3) 1F2(3/4; 3/2, 7/4; -(pi x^2/4)^2).
Estimate fresnel_s_estimate(double x, const EvalConfig& cfg = {});
double fresnel_s(double x, const EvalConfig& cfg = {});

FresnelPoint fresnel_point(double x, const EvalConfig& cfg = {});

/// int_0^inf S(t)/t^3 dt from the termwise (umbral) evaluation with the
/// sine weights:
///   (sqrt(pi)/12) Gamma(1/4) (3/4)_{-1/4} / ((3/2)_{-1/4} (7/4)_{-1/4}) = pi/4.
double fresnel_s_improper_integral(const EvalConfig& cfg = {});

/// One way of reading the published closed form for int_0^inf S(t)/t^3 dt.
struct ImproperReading {
  std::string label;
  /// NaN when the reading hits a Gamma pole.
  double value = 0.0;
  std::string note;
};

/// The readings of the closed form: sine weights with prefactor sqrt(pi)/12
/// (the derivation carried through), sine weights with prefactor sqrt(pi)/6
/// (as printed), and cosine weights (1/4; 1/2, 5/4) with prefactor sqrt(pi)/6.
std::vector<ImproperReading> fresnel_improper_readings();

/// Quadrature of int_0^inf S(t)/t^3 dt: [0, 4] directly, and the rest as
/// S(4)/32 + (1/2) int_4^inf sin(pi t^2/2)/t^2 dt (integration by parts),
/// the last term by oscillatory quadrature between zeros.
QuadResult fresnel_s_improper_quadrature(const EvalConfig& cfg = {});

/// int_0^inf exp(-a x^4) dx = Gamma(1/4) a^{-1/4} / 4. Throws DomainError for a <= 0.
double quartic_gauss_integral(double a);

QuadResult quartic_gauss_integral_quadrature(double a, const EvalConfig& cfg = {});

} // namespace umbral
