#include "umbral/special.hpp"

namespace umbral {
namespace {

double ipow(double base, unsigned e) noexcept {
  double result = 1.0;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

} // namespace

double hermite_two_var(unsigned n, double x, double y) noexcept {
  // Coefficients n!/((n-2r)! r!) are integers; build them by ratio.
  double coef = 1.0;
  double sum = 0.0;
  for (unsigned r = 0; 2 * r <= n; ++r) {
    sum += coef * ipow(x, n - 2 * r) * ipow(y, r);
    const double k = static_cast<double>(n - 2 * r);
    coef *= k * (k - 1.0) / static_cast<double>(r + 1);
  }
  return sum;
}

double hermite_classical(unsigned n, double x) noexcept { return hermite_two_var(n, 2.0 * x, -1.0); }

} // namespace umbral
