#pragma once

#include <cstddef>
#include <functional>

#include "umbral/config.hpp"
#include "umbral/result.hpp"

/// Numerical integration used by the evaluation fallbacks and by every
/// validation check. Nothing here knows about the closed forms it checks.
namespace umbral::quad {

using Integrand = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod on [a, b]. Stops when the summed
/// error estimate is below max(quad_rel_tol |I|, abs_tol). Throws
/// QuadratureError when quad_max_subdivisions is reached or the integrand
/// returns a non-finite value.
QuadResult adaptive_quad(const Integrand& f, double a, double b, const EvalConfig& cfg = {});

/// Integral over (0, inf). [0, split] is integrated adaptively; the tail is
/// mapped by s = split * e^v and summed over unit panels in v, with a
/// geometric remainder when panel contributions decay at a steady ratio.
/// Throws TailError if the panel contributions stop decreasing.
QuadResult semi_infinite_quad(const Integrand& f, const EvalConfig& cfg = {}, double split = 50.0);

/// Integral over (a, inf); see semi_infinite_quad.
QuadResult half_line_quad(const Integrand& f, double a, const EvalConfig& cfg = {}, double split = 50.0);

/// Integral over (-inf, inf) as two half-line integrals about 0.
QuadResult whole_line_quad(const Integrand& f, const EvalConfig& cfg = {}, double split = 50.0);

/// Cauchy principal value of the integral of f over [x0 - window, x0 + window],
/// where f has a simple pole at x0. Symmetric excisions eps = 1e-2, 1e-3,
/// 1e-4 are extrapolated to eps -> 0 (Richardson on the odd powers of eps).
QuadResult principal_value_quad(const Integrand& f, double x0, double window, const EvalConfig& cfg = {});

/// Integral over (a, inf) of an oscillating f whose sign changes at the
/// increasing points zero(0), zero(1), ... (all > a). Integrates between
/// consecutive zeros and accelerates the partial sums with Wynn's epsilon
/// algorithm.
QuadResult oscillatory_tail_quad(const Integrand& f, double a, const std::function<double(std::size_t)>& zero,
                                 const EvalConfig& cfg = {});

} // namespace umbral::quad
