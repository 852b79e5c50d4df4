#pragma once

#include <cstddef>

namespace umbral {

/// Tolerances and work budgets shared by every series and quadrature routine.
///
/// Passed by value or const reference; routines never mutate it.
struct EvalConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  std::size_t max_terms = 500;
  double quad_rel_tol = 1e-10;
  std::size_t quad_max_subdivisions = 2000;

  /// Throws DomainError unless all tolerances are positive,
  /// max_terms >= 8 and quad_max_subdivisions >= 16.
  void validate() const;

  /// Threshold a term magnitude must fall below to count as negligible.
  double term_threshold(double partial_sum_magnitude) const noexcept {
    const double rel = rel_tol * partial_sum_magnitude;
    return rel > abs_tol ? rel : abs_tol;
  }
};

} // namespace umbral
