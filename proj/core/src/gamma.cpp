#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "umbral/errors.hpp"
#include "umbral/special.hpp"

namespace umbral {
namespace {

// Godfrey's coefficients for g = 607/128, n = 15.
constexpr double lanczos_g = 607.0 / 128.0;
constexpr std::array<double, 15> lanczos_coef = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

constexpr double sqrt_two_pi = 2.5066282746310005024;

bool is_nonpositive_integer(double x) noexcept { return x <= 0.0 && x == std::floor(x); }

[[noreturn]] void throw_pole(const char* what, double x) {
  std::ostringstream msg;
  msg << what << ": pole at x = " << x;
  throw PoleError(msg.str());
}

double lanczos_sum(double z) noexcept {
  double a = lanczos_coef[0];
  for (std::size_t i = 1; i < lanczos_coef.size(); ++i) a += lanczos_coef[i] / (z + static_cast<double>(i));
  return a;
}

// Gamma(x) for x >= 1/2.
double gamma_lanczos(double x) noexcept {
  const double z = x - 1.0;
  const double t = z + lanczos_g + 0.5;
  // Split the power so t^(z+1/2) e^-t does not overflow before it is reduced.
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  return sqrt_two_pi * half_power * (std::exp(-t) * half_power) * lanczos_sum(z);
}

double log_gamma_lanczos(double x) noexcept {
  const double z = x - 1.0;
  const double t = z + lanczos_g + 0.5;
  return (z + 0.5) * std::log(t) - t + std::log(sqrt_two_pi * lanczos_sum(z));
}

// Sign of Gamma(x) away from its poles.
double gamma_sign(double x) noexcept {
  if (x > 0.0) return 1.0;
  const auto k = static_cast<long long>(std::ceil(-x));
  return (k % 2 == 0) ? 1.0 : -1.0;
}

} // namespace

double sin_pi(double x) noexcept {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double r = std::remainder(x, 2.0); // exact, in [-1, 1]
  const double a = std::fabs(r);
  const double sign = r < 0.0 ? -1.0 : 1.0;
  if (a == 0.0 || a == 1.0) return 0.0;
  if (a <= 0.25) return sign * std::sin(std::numbers::pi * a);
  if (a <= 0.75) return sign * std::cos(std::numbers::pi * (0.5 - a));
  return sign * std::sin(std::numbers::pi * (1.0 - a));
}

double gamma(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) throw_pole("gamma", x);
  if (x >= 1.0 && x <= 23.0 && x == std::floor(x)) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
    return f;
  }
  if (x < 0.5) return std::numbers::pi / (sin_pi(x) * gamma_lanczos(1.0 - x));
  if (x > 171.7) return std::numeric_limits<double>::infinity();
  return gamma_lanczos(x);
}

double log_abs_gamma(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) throw_pole("log_abs_gamma", x);
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) {
    return std::log(std::numbers::pi) - std::log(std::fabs(sin_pi(x))) - log_gamma_lanczos(1.0 - x);
  }
  return log_gamma_lanczos(x);
}

double pochhammer(double y, double r) {
  const bool integer_r = r == std::floor(r) && std::fabs(r) < 1e6;
  if (integer_r && r >= 0.0 && r <= 1000.0) {
    double p = 1.0;
    for (int k = 0; k < static_cast<int>(r); ++k) p *= y + k;
    return p;
  }
  if (integer_r && r < 0.0) {
    // (y)_{-k} = 1 / ((y-1)(y-2)...(y-k))
    double p = 1.0;
    for (int k = 1; k <= static_cast<int>(-r); ++k) {
      const double f = y - k;
      if (f == 0.0) throw_pole("pochhammer", y + r);
      p *= f;
    }
    return 1.0 / p;
  }
  const double top = y + r;
  if (is_nonpositive_integer(top)) throw_pole("pochhammer", top);
  if (is_nonpositive_integer(y)) return 0.0; // 1/Gamma(y) vanishes
  if (std::fabs(top) < 150.0 && std::fabs(y) < 150.0) return gamma(top) / gamma(y);
  return gamma_sign(top) * gamma_sign(y) * std::exp(log_abs_gamma(top) - log_abs_gamma(y));
}

} // namespace umbral
