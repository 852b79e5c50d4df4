#pragma once

// Shared truncation rule for every power series in the library: stop once two
// consecutive tail estimates fall below max(abs_tol, rel_tol * |partial sum|).
// For ratio series the tail estimate is |t_n| * max(1, q/(1-q)) with q the last
// term ratio, so slowly converging series are not cut short.

#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <string_view>

#include "double_double.hpp"
#include "umbral/config.hpp"
#include "umbral/errors.hpp"
#include "umbral/result.hpp"

namespace umbral::detail {

/// SeriesResult plus the largest term magnitude seen, used as a
/// cancellation indicator by callers that switch evaluation routes.
struct TrackedSeries {
  SeriesResult<double> result;
  double peak = 0.0;
};

/// Sums t_0 + t_1 + ... with t_{n+1} = t_n * ratio(n), in double-double.
template <class Ratio>
TrackedSeries sum_ratio_series(DoubleDouble first, Ratio&& ratio, const EvalConfig& cfg) {
  DoubleDouble sum = first;
  DoubleDouble term = first;
  double peak = abs(first);
  int small_run = abs(first) < cfg.term_threshold(abs(first)) ? 1 : 0;
  std::size_t used = 1;
  double tail = abs(first);
  bool converged = false;
  for (std::size_t n = 0; used < cfg.max_terms; ++n) {
    const DoubleDouble r = ratio(n);
    term = term * r;
    sum += term;
    ++used;
    const double mag = abs(term);
    const double q = abs(r);
    peak = std::fmax(peak, mag);
    tail = q < 1.0 ? mag * std::fmax(1.0, q / (1.0 - q)) : HUGE_VAL;
    small_run = tail < cfg.term_threshold(abs(sum)) ? small_run + 1 : 0;
    if (small_run >= 2) {
      converged = true;
      break;
    }
  }
  TrackedSeries out;
  out.result.value = static_cast<double>(sum);
  out.result.err_estimate = 2.0 * std::fmax(abs(term), tail);
  out.result.terms_used = used;
  out.result.converged = converged;
  out.peak = peak;
  return out;
}

/// Sums term(0) + term(1) + ... where each term is computed independently.
template <class T, class Term>
SeriesResult<T> sum_series(Term&& term, const EvalConfig& cfg) {
  T sum{};
  T last{};
  int small_run = 0;
  std::size_t used = 0;
  bool converged = false;
  for (std::size_t r = 0; r < cfg.max_terms; ++r) {
    last = term(r);
    sum += last;
    ++used;
    small_run = std::abs(last) < cfg.term_threshold(std::abs(sum)) ? small_run + 1 : 0;
    if (small_run >= 2) {
      converged = true;
      break;
    }
  }
  return {sum, 2.0 * std::abs(last), used, converged};
}

template <class T>
const SeriesResult<T>& require_converged(const SeriesResult<T>& r, std::string_view what) {
  if (!r.converged) {
    std::ostringstream msg;
    msg << what << ": series did not converge within " << r.terms_used
        << " terms (last error estimate " << r.err_estimate << ")";
    throw ConvergenceError(msg.str());
  }
  return r;
}

} // namespace umbral::detail
