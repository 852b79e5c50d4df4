#pragma once

#include <cstddef>
#include <string_view>

namespace umbral {

/// Outcome of a truncated series. `err_estimate` is twice the magnitude of
/// the last included term.
template <class T>
struct SeriesResult {
  T value{};
  double err_estimate = 0.0;
  std::size_t terms_used = 0;
  bool converged = false;
};

/// Outcome of a quadrature. `evaluations` counts integrand calls.
struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Which evaluation route produced an Estimate.
enum class Method {
  closed_form,
  series,
  asymptotic,
  recurrence,
  quadrature,
};

std::string_view to_string(Method m) noexcept;

/// Value of a function that may be computed along several routes, with the
/// route taken and the work it cost (terms or integrand evaluations).
struct Estimate {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t work = 0;
  Method method = Method::closed_form;
};

} // namespace umbral
