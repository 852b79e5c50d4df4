#pragma once

#include "umbral/config.hpp"
#include "umbral/result.hpp"

namespace umbral {

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

/// sin(pi x) with exact argument reduction; exactly zero at integers.
double sin_pi(double x) noexcept;

/// Euler Gamma. Lanczos (g = 607/128, 15 terms) for x >= 1/2, reflection
/// below. Throws PoleError at 0, -1, -2, ...
double gamma(double x);

/// log|Gamma(x)|. Throws PoleError at non-positive integers.
double log_abs_gamma(double x);

/// Rising factorial (y)_r. Integer r >= 0 uses the direct product; any other
/// r uses Gamma(y + r) / Gamma(y), switching to log-Gamma when either
/// argument is large. Returns 0 when only Gamma(y) is at a pole; throws
/// PoleError when Gamma(y + r) is.
double pochhammer(double y, double r);

// ---------------------------------------------------------------------------
// Hermite polynomials
// ---------------------------------------------------------------------------

/// H_n(x, y) = n! sum_{r <= n/2} x^{n-2r} y^r / ((n-2r)! r!).
/// Generating function: sum_n t^n/n! H_n(x, y) = exp(x t + y t^2).
double hermite_two_var(unsigned n, double x, double y) noexcept;

/// Physicists' Hermite polynomial, evaluated as H_n(2x, -1).
double hermite_classical(unsigned n, double x) noexcept;

// ---------------------------------------------------------------------------
// Dawson and erfi
// ---------------------------------------------------------------------------

/// Dawson integral F(x) = exp(-x^2) int_0^x exp(y^2) dy.
Estimate dawson_estimate(double x, const EvalConfig& cfg = {});
double dawson(double x, const EvalConfig& cfg = {});

/// Imaginary error function, (2/sqrt(pi)) exp(x^2) F(x). Throws OverflowError
/// for |x| > 26.
double erfi(double x, const EvalConfig& cfg = {});

/// Largest |x| accepted by erfi.
inline constexpr double erfi_max_argument = 26.0;

// ---------------------------------------------------------------------------
// Hypergeometric series
// ---------------------------------------------------------------------------

/// Confluent 1F1(a; c; x). Summed in double-double; Kummer's transform
/// exp(x) 1F1(c-a; c; -x) is used for x < -30, and for any x < 0 where the
/// transformed series has only positive terms.
SeriesResult<double> hyp1f1(double a, double c, double x, const EvalConfig& cfg = {});

/// Gauss 2F1(a, b; c; x) for |x| < 1, and x = 1 when c - a - b > 0.
/// Throws DomainError elsewhere.
SeriesResult<double> hyp2f1(double a, double b, double c, double x, const EvalConfig& cfg = {});

/// 1F2(a; b, c; x), entire in x.
SeriesResult<double> hyp1f2(double a, double b, double c, double x, const EvalConfig& cfg = {});

/// s-th derivative in x of 1F1(a; c; x), ((a)_s / (c)_s) 1F1(a+s; c+s; x).
double hyp1f1_derivative(unsigned s, double a, double c, double x, const EvalConfig& cfg = {});

} // namespace umbral
