#include "umbral/quasi_gauss.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "umbral/errors.hpp"
#include "umbral/quadrature.hpp"
#include "umbral/special.hpp"
#include "umbral/weights.hpp"

namespace umbral {
namespace {

constexpr double switch_peak_ratio = 1e6;
constexpr double switch_step = 0.01;
constexpr double switch_scan_limit = 12.0;

void require_n(const char* what, unsigned n) {
  if (n == 0) {
    std::ostringstream msg;
    msg << what << ": n must be >= 1";
    throw DomainError(msg.str());
  }
}

// int_0^inf exp(-s - c s^alpha) w(s^alpha) ds for 0 <= alpha < 2.
// alpha <= 1 substitutes s = u^{1/alpha}; for c > 1 the scaled variable
// v = c u keeps the integrand on a unit scale however large c is.
QuadResult stretched_laplace(double c, double alpha, const std::function<double(double)>& w,
                             const EvalConfig& cfg) {
  if (alpha == 0.0) return {std::exp(-c) * w(1.0), 0.0, 1, true};
  if (alpha > 1.0) {
    return quad::semi_infinite_quad(
        [&](double s) {
          const double q = std::pow(s, alpha);
          return std::exp(-s - c * q) * w(q);
        },
        cfg);
  }
  const double n = 1.0 / alpha;
  if (c <= 1.0) {
    return quad::semi_infinite_quad(
        [&](double u) {
          if (u == 0.0) return n == 1.0 ? w(0.0) : 0.0;
          return n * std::pow(u, n - 1.0) * std::exp(-std::pow(u, n) - c * u) * w(u);
        },
        cfg);
  }
  const double scale = n * std::pow(c, -n);
  QuadResult r = quad::semi_infinite_quad(
      [&](double v) {
        if (v == 0.0) return n == 1.0 ? w(0.0) : 0.0;
        return std::pow(v, n - 1.0) * std::exp(-v - std::pow(v / c, n)) * w(v / c);
      },
      cfg);
  r.value *= scale;
  r.err_estimate *= scale;
  return r;
}

double unit_weight(double) { return 1.0; }

// sum_k Gamma(k/n + 1) z^k / k!, with the largest term tracked.
QuasiSeries quasi_series(double z, unsigned n, const EvalConfig& cfg) {
  cfg.validate();
  const double nn = n;
  double power = 1.0; // z^k / k!
  double log_power = 0.0; // log|z^k / k!|
  const double log_z = std::log(std::fabs(z));
  double sum = 0.0;
  double peak = 0.0;
  double last = 0.0;
  int small_run = 0;
  std::size_t used = 0;
  bool converged = false;
  for (std::size_t k = 0; k < cfg.max_terms; ++k) {
    if (k > 0) {
      const double kk = static_cast<double>(k);
      power *= z / kk;
      log_power += log_z - std::log(kk);
    }
    const double arg = static_cast<double>(k) / nn + 1.0;
    double term;
    if (z == 0.0) {
      term = k == 0 ? 1.0 : 0.0;
    } else if (arg < 170.0 && std::fabs(power) > 1e-290) {
      term = gamma(arg) * power;
    } else {
      const double sign = (z < 0.0 && k % 2 == 1) ? -1.0 : 1.0;
      term = sign * std::exp(log_abs_gamma(arg) + log_power);
    }
    sum += term;
    last = term;
    ++used;
    peak = std::fmax(peak, std::fabs(term));
    if (!std::isfinite(sum)) break;
    small_run = std::fabs(term) < cfg.term_threshold(std::fabs(sum)) ? small_run + 1 : 0;
    if (small_run >= 2) {
      converged = true;
      break;
    }
  }
  return {{sum, 2.0 * std::fabs(last), used, converged}, peak};
}

double compute_switch(unsigned n) {
  const EvalConfig cfg;
  double good = 0.0;
  for (int i = 1; i * switch_step <= switch_scan_limit; ++i) {
    const double x = i * switch_step;
    const QuasiSeries s = quasi_series(-x * x, n, cfg);
    const bool ok = s.result.converged && std::isfinite(s.result.value) &&
                    s.peak <= switch_peak_ratio * std::fabs(s.result.value);
    if (!ok) break;
    good = x;
  }
  return good;
}

std::string condition_text(unsigned m, unsigned n) {
  std::ostringstream s;
  s << "(m+1)/(2n) = " << m + 1 << "/" << 2 * n << (m + 1 < 2 * n ? " < 1" : " >= 1");
  return s.str();
}

} // namespace

void QuasiGaussParams::validate() const {
  if (n == 0 || !(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(d)) {
    std::ostringstream msg;
    msg << "QuasiGaussParams: need n >= 1, sigma > 0 and finite d (got n = " << n << ", sigma = " << sigma
        << ", d = " << d << ")";
    throw DomainError(msg.str());
  }
}

QuasiSeries quasi_gauss_series(double x, unsigned n, const EvalConfig& cfg) {
  require_n("quasi_gauss_series", n);
  return quasi_series(-x * x, n, cfg);
}

SeriesResult<double> quasi_exp_series(double z, unsigned n, const EvalConfig& cfg) {
  require_n("quasi_exp_series", n);
  const QuasiSeries s = quasi_series(z, n, cfg);
  if (!std::isfinite(s.result.value)) throw ConvergenceError("quasi_exp_series: partial sums overflowed");
  if (!s.result.converged) {
    std::ostringstream msg;
    msg << "quasi_exp_series: no convergence within " << s.result.terms_used << " terms at z = " << z;
    throw ConvergenceError(msg.str());
  }
  return s.result;
}

QuadResult quasi_exp_quadrature(double z, unsigned n, const EvalConfig& cfg) {
  require_n("quasi_exp_quadrature", n);
  if (n == 1 && !(z < 1.0)) throw DomainError("quasi_exp_quadrature: e(z|1) diverges for z >= 1");
  return stretched_laplace(-z, 1.0 / n, unit_weight, cfg);
}

double quasi_gauss_switch(unsigned n) {
  require_n("quasi_gauss_switch", n);
  static std::mutex mutex;
  static std::map<unsigned, double> table;
  {
    const std::lock_guard<std::mutex> lock(mutex);
    if (auto it = table.find(n); it != table.end()) return it->second;
  }
  const double value = compute_switch(n); // deterministic, so a racing duplicate is harmless
  const std::lock_guard<std::mutex> lock(mutex);
  return table.emplace(n, value).first->second;
}

Estimate quasi_gauss_estimate(double x, unsigned n, const EvalConfig& cfg) {
  require_n("quasi_gauss", n);
  cfg.validate();
  if (!std::isfinite(x)) throw DomainError("quasi_gauss: non-finite argument");
  if (std::fabs(x) <= quasi_gauss_switch(n)) {
    const QuasiSeries s = quasi_series(-x * x, n, cfg);
    if (s.result.converged) {
      return {s.result.value, s.result.err_estimate, s.result.terms_used, Method::series};
    }
  }
  const QuadResult q = quasi_exp_quadrature(-x * x, n, cfg);
  return {q.value, q.err_estimate, q.evaluations, Method::quadrature};
}

double quasi_gauss(double x, unsigned n, const EvalConfig& cfg) { return quasi_gauss_estimate(x, n, cfg).value; }

double quasi_gauss_integral(unsigned n) {
  require_n("quasi_gauss_integral", n);
  return std::sqrt(std::numbers::pi) * gamma(1.0 - 1.0 / (2.0 * n));
}

QuadResult quasi_gauss_integral_quadrature(unsigned n, const EvalConfig& cfg) {
  require_n("quasi_gauss_integral_quadrature", n);
  QuadResult half = quad::semi_infinite_quad(
      [&](double x) { return quasi_exp_quadrature(-x * x, n, cfg).value; }, cfg);
  half.value *= 2.0;
  half.err_estimate *= 2.0;
  return half;
}

SeriesResult<double> e_nu(double x, double nu, unsigned n, const EvalConfig& cfg) {
  require_n("e_nu", n);
  return umbral_exp(quasi_weight(n), x, nu, cfg);
}

double quasi_gauss_quadratic_integral(double a, double b, unsigned n, const EvalConfig& cfg) {
  if (!(a > 0.0)) throw DomainError("quasi_gauss_quadratic_integral: a must be positive");
  return std::sqrt(std::numbers::pi / a) * e_nu(b * b / (4.0 * a), -0.5, n, cfg).value;
}

QuadResult quasi_gauss_quadratic_integral_quadrature(double a, double b, unsigned n, const EvalConfig& cfg) {
  if (!(a > 0.0)) throw DomainError("quasi_gauss_quadratic_integral_quadrature: a must be positive");
  const double centre = b / (2.0 * a);
  return quad::whole_line_quad(
      [&](double t) {
        const double x = centre + t;
        return quasi_exp_quadrature(-(a * x * x - b * x), n, cfg).value;
      },
      cfg);
}

double hermite_like(unsigned m, double x, double y, unsigned n) noexcept {
  // m!/((m-2r)! r!) built up as in the two-variable Hermite sum.
  double coef = 1.0;
  double sum = 0.0;
  const double nn = n == 0 ? 1.0 : n;
  for (unsigned r = 0; 2 * r <= m; ++r) {
    if (r > 0) {
      const double k = m - 2.0 * (r - 1);
      coef *= k * (k - 1.0) / r;
    }
    sum += coef * std::pow(x, m - 2.0 * r) * std::pow(y, static_cast<double>(r)) *
           gamma((m - static_cast<double>(r)) / nn + 1.0);
  }
  return sum;
}

double density(double x, const QuasiGaussParams& p, const EvalConfig& cfg) {
  p.validate();
  const double norm = std::sqrt(2.0 * std::numbers::pi) * gamma(1.0 - 1.0 / (2.0 * p.n)) * p.sigma;
  const double u = x / p.sigma;
  return quasi_gauss(u / std::numbers::sqrt2, p.n, cfg) / norm;
}

MomentResult moment(unsigned m, const QuasiGaussParams& p, const EvalConfig& cfg) {
  cfg.validate();
  p.validate();
  MomentResult out;
  out.condition = condition_text(m, p.n);
  out.finite = m + 1 < 2 * p.n;
  if (!out.finite) {
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  const double c = 1.0 - 1.0 / (2.0 * p.n);
  double sum = 0.0;
  double factor = 1.0; // m! / (2^r r! (m-2r)!)
  for (unsigned r = 0; 2 * r <= m; ++r) {
    if (r > 0) {
      const double k = m - 2.0 * (r - 1);
      factor *= k * (k - 1.0) / (2.0 * r);
    }
    sum += factor * std::pow(p.d, m - 2.0 * r) * std::pow(p.sigma, 2.0 * r) * gamma(c - r / static_cast<double>(p.n));
  }
  out.value = sum / gamma(c);
  return out;
}

MomentResult central_moment(unsigned m, unsigned n, double sigma) {
  QuasiGaussParams{n, sigma, 0.0}.validate();
  MomentResult out;
  out.condition = condition_text(m, n);
  out.finite = m + 1 < 2 * n;
  if (!out.finite) {
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  if (m % 2 == 1) {
    out.value = 0.0;
    return out;
  }
  const double c = 1.0 - 1.0 / (2.0 * n);
  double mfact = 1.0;
  for (unsigned j = 2; j <= m; ++j) mfact *= j;
  out.value = mfact / (gamma(c) * gamma(m / 2.0 + 1.0)) * std::pow(sigma * sigma / 2.0, m / 2.0) *
              gamma(c - m / (2.0 * n));
  return out;
}

QuadResult moment_quadrature(unsigned m, const QuasiGaussParams& p, const EvalConfig& cfg) {
  p.validate();
  const double norm = std::sqrt(2.0 * std::numbers::pi) * gamma(1.0 - 1.0 / (2.0 * p.n)) * p.sigma;
  QuadResult r = quad::whole_line_quad(
      [&](double x) {
        const double u = x / p.sigma;
        return std::pow(x + p.d, static_cast<double>(m)) * quasi_exp_quadrature(-0.5 * u * u, p.n, cfg).value;
      },
      cfg);
  r.value /= norm;
  r.err_estimate /= norm;
  return r;
}

QuadResult moment_window_quadrature(unsigned m, const QuasiGaussParams& p, double window, const EvalConfig& cfg) {
  p.validate();
  if (!(window > 0.0)) throw DomainError("moment_window_quadrature: window must be positive");
  const double norm = std::sqrt(2.0 * std::numbers::pi) * gamma(1.0 - 1.0 / (2.0 * p.n)) * p.sigma;
  QuadResult r = quad::adaptive_quad(
      [&](double x) {
        const double u = x / p.sigma;
        return std::pow(x + p.d, static_cast<double>(m)) * quasi_exp_quadrature(-0.5 * u * u, p.n, cfg).value;
      },
      -window, window, cfg);
  r.value /= norm;
  r.err_estimate /= norm;
  return r;
}

double quasi_gauss_derivative(unsigned m, double x, unsigned n, const EvalConfig& cfg) {
  require_n("quasi_gauss_derivative", n);
  if (!std::isfinite(x)) throw DomainError("quasi_gauss_derivative: non-finite argument");
  return stretched_laplace(
             x * x, 1.0 / n, [m, x](double q) { return hermite_two_var(m, -2.0 * x * q, -q); }, cfg)
      .value;
}

double i_alpha(double alpha) {
  if (!(alpha < 2.0)) throw DomainError("i_alpha: requires alpha < 2");
  return std::sqrt(std::numbers::pi) * gamma(1.0 - alpha / 2.0);
}

QuadResult i_alpha_quadrature(double alpha, const EvalConfig& cfg) {
  if (!(alpha >= 0.0 && alpha < 2.0)) throw DomainError("i_alpha_quadrature: requires 0 <= alpha < 2");
  QuadResult half = quad::semi_infinite_quad(
      [&](double x) { return stretched_laplace(x * x, alpha, unit_weight, cfg).value; }, cfg);
  half.value *= 2.0;
  half.err_estimate *= 2.0;
  return half;
}

} // namespace umbral
