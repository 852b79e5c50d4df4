#pragma once

#include <complex>
#include <functional>
#include <string>

#include "umbral/config.hpp"
#include "umbral/result.hpp"

namespace umbral {

/// Realization of an umbral operator acting on its vacuum: the map
/// alpha -> (operator^alpha vacuum). Every umbral image in the library is a
/// power series whose coefficients are read off one of these weights.
struct UmbralWeight {
  std::function<double(double)> weight;
  /// Where `weight` is defined, in words.
  std::string domain_note;
  /// Optional log|weight|, used when the weight itself overflows.
  std::function<double(double)> log_abs_weight;

  double operator()(double alpha) const { return weight(alpha); }
};

/// alpha -> 1 / Gamma(alpha + 1). Realizes the Gaussian as a Lorentzian image.
UmbralWeight gauss_weight();

/// alpha -> Gamma(alpha / n + 1), n >= 1. Generates the quasi-Gaussian family.
UmbralWeight quasi_weight(unsigned n);

/// k -> (a)_k / (c)_k on non-negative integers k. Generates 1F1(a; c; .).
UmbralWeight pochhammer_weight(double a, double c);

/// beta -> Gamma(beta + 1) sin(pi beta). Generates the one-sided stable laws.
UmbralWeight levy_weight();

/// alpha -> w(scale * alpha).
UmbralWeight scaled(UmbralWeight w, double scale);

/// sum_{r >= 0} w(r + shift) z^r / r!, truncated by the shared series rule.
/// Throws ConvergenceError when cfg.max_terms is exhausted.
template <class T>
SeriesResult<T> umbral_exp(const UmbralWeight& w, T z, double shift, const EvalConfig& cfg = {});

extern template SeriesResult<double> umbral_exp(const UmbralWeight&, double, double, const EvalConfig&);
extern template SeriesResult<std::complex<double>> umbral_exp(const UmbralWeight&, std::complex<double>,
                                                              double, const EvalConfig&);

} // namespace umbral
