#include "umbral_cli/validation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "umbral/umbral.hpp"
#include "umbral_cli/catalog.hpp"

namespace umbral::cli {
namespace {

constexpr double pi = std::numbers::pi;
const double sqrt_pi = std::sqrt(pi);

std::string fmt(double v) {
  std::ostringstream o;
  o << v;
  return o.str();
}

std::vector<double> grid(double a, double b, std::size_t count) {
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = count == 1 ? a : (a * static_cast<double>(count - 1 - i) + b * static_cast<double>(i)) /
                                 static_cast<double>(count - 1);
  }
  return xs;
}

std::vector<double> log_grid(double a, double b, std::size_t count) {
  std::vector<double> xs = grid(std::log(a), std::log(b), count);
  for (double& x : xs) x = std::exp(x);
  return xs;
}

double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

/// max |f - g| / max |g| over the grid.
double normwise(const std::vector<double>& xs, const std::function<double(double)>& f,
                const std::function<double(double)>& g) {
  double diff = 0.0;
  double scale = 0.0;
  for (double x : xs) {
    const double ref = g(x);
    diff = std::max(diff, std::fabs(f(x) - ref));
    scale = std::max(scale, std::fabs(ref));
  }
  return diff / scale;
}

/// max |f/g - 1| over the grid.
double max_relative(const std::vector<double>& xs, const std::function<double(double)>& f,
                    const std::function<double(double)>& g) {
  double worst = 0.0;
  for (double x : xs) {
    const double ref = g(x);
    worst = std::max(worst, std::fabs(f(x) - ref) / std::fabs(ref));
  }
  return worst;
}

Measured residual(double r, std::string note = {}) { return {r, 0.0, std::move(note)}; }

Measured against_quadrature(double closed, const QuadResult& q) {
  return {closed, q.value, "quadrature err_estimate " + fmt(q.err_estimate)};
}

// ---------------------------------------------------------------------------

void gauss_trig(std::vector<CheckTask>& t) {
  t.push_back({"gauss-trig: cg^2 + sg^2 = e^{-2x^2}(1 + erfi^2), max over 200 points on [-3,3]",
               "Gaussian trigonometric identity", 1e-10, true, [](const EvalConfig& cfg) {
                 double worst = 0.0;
                 for (double x : grid(-3, 3, 200)) {
                   const double c = cg(x);
                   const double s = sg(x, cfg);
                   const double e = erfi(x, cfg);
                   worst = std::max(worst, std::fabs(c * c + s * s - std::exp(-2 * x * x) * (1 + e * e)));
                 }
                 return residual(worst);
               }});
  t.push_back({"gauss-trig: sg three-way agreement on [-3,3]",
               "S_g = (2/sqrt(pi)) F(x) = (2/sqrt(pi)) x e^{-x^2} 1F1(1/2;3/2;x^2) = power series", 1e-10, true,
               [](const EvalConfig& cfg) {
                 double worst = 0.0;
                 for (double x : grid(-3, 3, 201)) {
                   const double dawson_route = sg(x, cfg);
                   const double confluent = 2 / sqrt_pi * x * std::exp(-x * x) * hyp1f1(0.5, 1.5, x * x, cfg).value;
                   const double series = sg_series(x, cfg).value;
                   worst = std::max({worst, std::fabs(dawson_route - confluent), std::fabs(dawson_route - series)});
                 }
                 return residual(worst, "largest absolute pairwise difference");
               }});
  t.push_back({"gauss-trig: sg series vs Dawson at x=1.5", "S_g power series vs Dawson form", 1e-10, true,
               [](const EvalConfig& cfg) { return Measured{sg_series(1.5, cfg).value, sg(1.5, cfg), {}}; }});
  t.push_back({"gauss-trig: integral of sg(x)/x over the real line = π", "int S_g(x)/x dx = pi", 1e-6, true,
               [](const EvalConfig& cfg) {
                 const QuadResult q = sg_over_x_integral_quadrature(cfg);
                 return Measured{q.value, pi, "quadrature err_estimate " + fmt(q.err_estimate)};
               }});
  t.push_back({"gauss-trig: 2F1(1/2,1/2;3/2;1) = π/2", "Gauss summation of 2F1 at unit argument", 1e-12, true,
               [](const EvalConfig& cfg) { return Measured{hyp2f1(0.5, 0.5, 1.5, 1.0, cfg).value, pi / 2, {}}; }});
  for (double a : {0.25, 0.5, 0.75}) {
    t.push_back({"gauss-trig: integral of sg(x,α) over [0,inf), α=" + fmt(a),
                 "int_0^inf S_g(x,alpha) dx = (1/sqrt(pi)) 2F1(1/2,1;3/2;alpha)", 1e-7, true,
                 [a](const EvalConfig& cfg) {
                   return against_quadrature(sg_alpha_integral(a, cfg), sg_alpha_integral_quadrature(a, cfg));
                 }});
  }
  for (double x : {0.5, 1.0, 2.0}) {
    t.push_back({"gauss-trig: Kramers-Kronig residual at x=" + fmt(x),
                 "S_g(x) = -(1/pi) PV int C_g(xi)/(xi - x) dxi", 1e-4, true,
                 [x](const EvalConfig& cfg) { return residual(std::fabs(kk_residual(x, cfg))); }});
  }
  for (unsigned m = 1; m <= 4; ++m) {
    t.push_back({"gauss-trig: sg_derivative(" + std::to_string(m) + ") vs finite differences on [-2,2]",
                 "successive derivatives of S_g, resolved series", 1e-5, true, [m](const EvalConfig& cfg) {
                   const auto prev = [&](double x) { return sg_derivative(m - 1, x, cfg); };
                   const double e = normwise(
                       grid(-2, 2, 81), [&](double x) { return sg_derivative(m, x, cfg); },
                       [&](double x) { return central_difference(prev, x, 1e-3); });
                   return residual(e, "normwise: max |d - fd| / max |fd|");
                 }});
    t.push_back({"gauss-trig: cg_derivative(" + std::to_string(m) + ") vs finite differences on [-2,2]",
                 "C_g^(m)(x) = (-1)^m H_m(x) e^{-x^2}", 1e-5, true, [m](const EvalConfig&) {
                   const auto prev = [&](double x) { return cg_derivative(m - 1, x); };
                   const double e = normwise(
                       grid(-2, 2, 81), [&](double x) { return cg_derivative(m, x); },
                       [&](double x) { return central_difference(prev, x, 1e-3); });
                   return residual(e, "normwise: max |d - fd| / max |fd|");
                 }});
  }
  t.push_back({"gauss-trig: derivative series vs recurrence, m<=4, |x|<=2",
               "successive derivatives of S_g, resolved series", 1e-9, true, [](const EvalConfig& cfg) {
                 double worst = 0.0;
                 for (unsigned m = 0; m <= 4; ++m) {
                   worst = std::max(worst, normwise(
                                               grid(-2, 2, 81),
                                               [&](double x) { return sg_derivative_series(m, x, cfg).value; },
                                               [&](double x) { return sg_derivative_recurrence(m, x, cfg); }));
                 }
                 return residual(worst, "normwise per order, worst order");
               }});
  t.push_back({"gauss-trig: sg_antiderivative(1) vs quadrature", "int_0^x S_g, series", 1e-10, true,
               [](const EvalConfig& cfg) {
                 return against_quadrature(sg_antiderivative(1.0, cfg),
                                           quad::adaptive_quad([&](double x) { return sg(x, cfg); }, 0.0, 1.0, cfg));
               }});
  t.push_back({"gauss-trig: gauss_primitive(6) = sqrt(π)/2", "int e^{-x^2} dx, termwise series", 1e-12, true,
               [](const EvalConfig& cfg) { return Measured{gauss_primitive(6.0, cfg), sqrt_pi / 2, {}}; }});
}

void quasi_gauss_suite(std::vector<CheckTask>& t) {
  t.push_back({"I_e(1)=π", "I_e(1) = pi", 1e-6, true, [](const EvalConfig& cfg) {
                 const QuadResult q = quasi_gauss_integral_quadrature(1, cfg);
                 return Measured{q.value, pi, "2-D quadrature; closed form " + fmt(quasi_gauss_integral(1))};
               }});
  for (unsigned n = 2; n <= 6; ++n) {
    t.push_back({"I_e(" + std::to_string(n) + ")=√π Γ(1-1/(2n))", "I_e(n) = sqrt(pi) Gamma(1 - 1/(2n))", 1e-6,
                 true, [n](const EvalConfig& cfg) {
                   return against_quadrature(quasi_gauss_integral(n), quasi_gauss_integral_quadrature(n, cfg));
                 }});
  }
  for (double a : {0.0, 0.5, 1.0}) {
    t.push_back({"I(α)=√π Γ(1-α/2), α=" + fmt(a), "I(alpha) = sqrt(pi) Gamma(1 - alpha/2)", 1e-6, true,
                 [a](const EvalConfig& cfg) { return against_quadrature(i_alpha(a), i_alpha_quadrature(a, cfg)); }});
  }
  t.push_back({"quasi-gauss: M_0 = 1", "zeroth moment is the normalization", 0.0, true, [](const EvalConfig& cfg) {
                 return Measured{moment(0, {3, 1.0, 0.0}, cfg).value, 1.0, "n=3, sigma=1, d=0"};
               }});
  t.push_back({"quasi-gauss: M_2(sigma=1,n=3) vs quadrature", "moments M_(m,d), closed form", 1e-6, true,
               [](const EvalConfig& cfg) {
                 const QuasiGaussParams p{3, 1.0, 0.0};
                 return against_quadrature(moment(2, p, cfg).value, moment_quadrature(2, p, cfg));
               }});
  t.push_back({"quasi-gauss: finiteness m=5 n=2 is infinite", "finite moments need (m+1)/(2n) < 1", 0.0, true,
               [](const EvalConfig& cfg) {
                 const MomentResult r = moment(5, {2, 1.0, 0.0}, cfg);
                 return Measured{r.finite ? 1.0 : 0.0, 0.0, r.condition};
               }});
  t.push_back({"quasi-gauss: finiteness m=4 n=3 is finite", "finite moments need (m+1)/(2n) < 1", 0.0, true,
               [](const EvalConfig& cfg) {
                 const MomentResult r = moment(4, {3, 1.0, 0.0}, cfg);
                 return Measured{r.finite ? 1.0 : 0.0, 1.0, r.condition};
               }});
  t.push_back({"quasi-gauss: finiteness m=5 n=3 stated finite", "finite moments need (m+1)/(2n) < 1", 0.0, false,
               [](const EvalConfig& cfg) {
                 const MomentResult r = moment(5, {3, 1.0, 0.0}, cfg);
                 return Measured{r.finite ? 1.0 : 0.0, 1.0,
                                 r.condition +
                                     "; (m+1)/(2n) = 1 is the boundary of the strict condition, and |x|^5 F(x) decays "
                                     "like 1/|x|, so the moment integral diverges"};
               }});
  for (unsigned n : {1u, 2u, 3u, 5u}) {
    t.push_back({"quasi-gauss: series vs quadrature band, n=" + std::to_string(n),
                 "e(-x^2|n) series = int_0^inf exp(-s - x^2 s^{1/n}) ds", 1e-8, true, [n](const EvalConfig& cfg) {
                   const double hi = quasi_gauss_switch(n);
                   const std::size_t count = static_cast<std::size_t>(std::ceil((hi - 0.5) / 0.05)) + 1;
                   const double e = max_relative(
                       grid(0.5, hi, count), [&](double x) { return quasi_gauss_series(x, n, cfg).result.value; },
                       [&](double x) { return quasi_exp_quadrature(-x * x, n, cfg).value; });
                   return residual(e, "band [0.5, " + fmt(hi) + "], max relative difference");
                 }});
  }
  for (unsigned n : {1u, 2u, 3u}) {
    t.push_back({"quasi-gauss: tail law x^{2n} e(-x^2|n) -> n! at x=30, n=" + std::to_string(n),
                 "large-x behaviour of the integral representation", 0.05, true, [n](const EvalConfig& cfg) {
                   const double x = 30.0;
                   return Measured{quasi_gauss(x, n, cfg) * std::pow(x, 2.0 * n), std::tgamma(n + 1.0), {}};
                 }});
  }
  t.push_back({"quasi-gauss: e(-x^2|1) = 1/(1+x^2) at x=1", "e(-x^2|1) = 1/(1+x^2)", 1e-12, true,
               [](const EvalConfig& cfg) { return Measured{quasi_gauss(1.0, 1, cfg), 0.5, {}}; }});
  t.push_back({"quasi-gauss: quadratic integral a=2 b=1 n=3", "int e(-a x^2 + b x|n) dx = sqrt(pi/a) e_{-1/2}", 1e-8,
               true, [](const EvalConfig& cfg) {
                 return against_quadrature(quasi_gauss_quadratic_integral(2, 1, 3, cfg),
                                           quasi_gauss_quadratic_integral_quadrature(2, 1, 3, cfg));
               }});
  t.push_back({"quasi-gauss: density normalization n=2 sigma=1.5", "F(x; sigma|n) integrates to one", 1e-6, true,
               [](const EvalConfig& cfg) {
                 const QuadResult q = moment_quadrature(0, {2, 1.5, 0.0}, cfg);
                 return Measured{q.value, 1.0, "quadrature err_estimate " + fmt(q.err_estimate)};
               }});
  t.push_back({"quasi-gauss: Hermite-like generating function partial sums",
               "sum t^s/s! H_s(x,y|n) = e(x t + y t^2|n)", 1e-10, true, [](const EvalConfig& cfg) {
                 const double x = 0.5, y = -0.4, tt = 0.3;
                 const unsigned n = 2;
                 double sum = 0.0;
                 double power = 1.0;
                 for (unsigned s = 0; s <= 40; ++s) {
                   sum += power * hermite_like(s, x, y, n);
                   power *= tt / (s + 1.0);
                 }
                 return Measured{sum, quasi_exp_series(x * tt + y * tt * tt, n, cfg).value, "x=0.5 y=-0.4 t=0.3 n=2"};
               }});
}

std::string laplace_name(double p, double a) {
  if (p == 1.0) return "laplace(1," + fmt(a) + ")=e^{−1}";
  return "laplace(" + fmt(p) + "," + fmt(a) + ")=e^{−" + fmt(p) + "^" + fmt(a) + "}";
}

void levy_suite(std::vector<CheckTask>& t) {
  for (double p : {0.5, 1.0, 2.0}) {
    for (double a : {0.3, 0.5, 0.7}) {
      t.push_back({laplace_name(p, a), "int e^{-p x} g_alpha(x) dx = e^{-p^alpha}", 1e-5, true,
                   [p, a](const EvalConfig& cfg) {
                     const LaplaceCheck c = levy_laplace(p, a, cfg);
                     return Measured{c.numeric, c.closed_form, "quadrature err_estimate " + fmt(c.err_estimate)};
                   }});
    }
  }
  t.push_back({"levy: α=1/2 density vs Lévy-Smirnov on [0.05,20]",
               "g_{1/2}(x) = x^{-3/2} e^{-1/(4x)} / (2 sqrt(pi))", 1e-7, true, [](const EvalConfig& cfg) {
                 const double e = max_relative(
                     log_grid(0.05, 20, 40), [&](double x) { return levy_density(x, 0.5, cfg); },
                     [](double x) { return std::pow(x, -1.5) * std::exp(-0.25 / x) / (2 * sqrt_pi); });
                 return residual(e, "max relative difference over 40 log-spaced points");
               }});
  for (auto [mu, a] : {std::pair{0.2, 0.5}, std::pair{0.3, 0.7}}) {
    t.push_back({"levy: moment <x^" + fmt(mu) + "> at α=" + fmt(a) + " vs quadrature",
                 "<x^mu> = Gamma(mu) sin(pi mu) / (sin(pi mu/alpha) Gamma(mu/alpha))", 1e-4, true,
                 [mu, a](const EvalConfig& cfg) {
                   return against_quadrature(levy_moment(mu, a), levy_moment_quadrature(mu, a, cfg));
                 }});
  }
  for (double p : {1.0, 4.0}) {
    t.push_back({"levy: Weibull transform p=" + fmt(p) + " α=0.5",
                 "int e^{-p x} g_{alpha,alpha-1}(x) dx = p^{alpha-1} e^{-p^alpha}", 1e-5, true,
                 [p](const EvalConfig& cfg) {
                   const LaplaceCheck c = weibull_laplace_check(p, 0.5, cfg);
                   return Measured{c.numeric, c.closed_form, "weight (-s)^nu with the principal branch"};
                 }});
    t.push_back({"levy: Weibull transform p=" + fmt(p) + " α=0.5, bare s^nu weight",
                 "int e^{-p x} g_{alpha,alpha-1}(x) dx = p^{alpha-1} e^{-p^alpha}", 1e-5, false,
                 [p](const EvalConfig& cfg) {
                   const LaplaceCheck c = weibull_laplace_literal_check(p, 0.5, cfg);
                   return Measured{c.numeric, c.closed_form,
                                   "weight s^nu without the branch phase e^{i pi nu}; reported for comparison"};
                 }});
  }
  for (double a : {0.3, 0.5, 0.7}) {
    t.push_back({"levy: unit mass α=" + fmt(a), "e^{-p^alpha} at p = 0", 1e-5, true, [a](const EvalConfig& cfg) {
                   const QuadResult q =
                       quad::semi_infinite_quad([&](double x) { return x == 0.0 ? 0.0 : levy_density(x, a, cfg); }, cfg);
                   return Measured{q.value, 1.0, "quadrature err_estimate " + fmt(q.err_estimate)};
                 }});
    t.push_back({"levy: series vs contour on [5,50], α=" + fmt(a), "g_alpha series = contour integral", 1e-6, true,
                 [a](const EvalConfig& cfg) {
                   const double e = max_relative(
                       log_grid(5, 50, 12), [&](double x) { return levy_density_series(x, a, cfg).value; },
                       [&](double x) { return levy_contour_integral(x, {a, 0.0}, cfg).value; });
                   return residual(e, "max relative difference over 12 log-spaced points");
                 }});
    t.push_back({"levy: positivity on (0,100], α=" + fmt(a), "g_alpha is a probability density", 1e-10, true,
                 [a](const EvalConfig& cfg) {
                   double lowest = 0.0;
                   for (double x : log_grid(0.05, 100, 60)) lowest = std::min(lowest, levy_density(x, a, cfg));
                   return residual(-lowest, "most negative density value, sign flipped");
                 }});
  }
}

void fresnel_suite(std::vector<CheckTask>& t) {
  const auto path_vs_quadrature = [](double (*f)(double, const EvalConfig&), double (*integrand)(double)) {
    return [f, integrand](const EvalConfig& cfg) {
      double worst = 0.0;
      for (double x : grid(0.1, 4, 40)) {
        const QuadResult q = quad::adaptive_quad(integrand, 0.0, x, cfg);
        worst = std::max(worst, std::fabs(f(x, cfg) - q.value));
      }
      return residual(worst, "max absolute difference over 40 points");
    };
  };
  t.push_back({"fresnel: C hypergeometric path vs quadrature on [0,4]", "C(x) = x 1F2(1/4; 1/2, 5/4; -(pi x^2/4)^2)",
               1e-9, true,
               path_vs_quadrature(fresnel_c, [](double u) { return std::cos(pi * u * u / 2); })});
  t.push_back({"fresnel: S hypergeometric path vs quadrature on [0,4]",
               "S(x) = (pi/2)(x^3/3) 1F2(3/4; 3/2, 7/4; -(pi x^2/4)^2)", 1e-9, true,
               path_vs_quadrature(fresnel_s, [](double u) { return std::sin(pi * u * u / 2); })});
  const std::vector<ImproperReading> readings = fresnel_improper_readings();
  for (std::size_t i = 0; i < readings.size(); ++i) {
    const ImproperReading r = readings[i];
    const bool matched = i == 0;
    t.push_back({"fresnel: improper integral of S(x)/x^3, " + r.label, "improper integral of S(xi)/xi^3 over (0,inf)",
                 1e-5, matched, [r, matched](const EvalConfig& cfg) {
                   const QuadResult q = fresnel_s_improper_quadrature(cfg);
                   return Measured{r.value, q.value,
                                   (matched ? "matches quadrature; " : "reported for comparison; ") + r.note};
                 }});
  }
  for (double a : {1.0, 0.5}) {
    t.push_back({"fresnel: quartic Gaussian integral a=" + fmt(a), "int_0^inf e^{-a x^4} dx = Gamma(1/4) a^{-1/4}/4",
                 1e-10, true, [a](const EvalConfig& cfg) {
                   return against_quadrature(quartic_gauss_integral(a), quartic_gauss_integral_quadrature(a, cfg));
                 }});
  }
  t.push_back({"fresnel: derivative laws by finite differences", "C' = cos(pi x^2/2), S' = sin(pi x^2/2)", 1e-6, true,
               [](const EvalConfig& cfg) {
                 double worst = 0.0;
                 for (double x : grid(0.25, 7.5, 30)) {
                   const double dc = central_difference([&](double u) { return fresnel_c(u, cfg); }, x, 1e-3);
                   const double ds = central_difference([&](double u) { return fresnel_s(u, cfg); }, x, 1e-3);
                   worst = std::max({worst, std::fabs(dc - std::cos(pi * x * x / 2)),
                                     std::fabs(ds - std::sin(pi * x * x / 2))});
                 }
                 return residual(worst, "max absolute difference, both functions");
               }});
  for (double x : {8.0, -8.0}) {
    t.push_back({"fresnel: C and S within 1/(π|x|) of ±1/2 at x=" + fmt(x), "C, S -> 1/2 as x -> inf",
                 1.0 / (pi * std::fabs(x)), true, [x](const EvalConfig& cfg) {
                   const double target = x > 0 ? 0.5 : -0.5;
                   const double off = std::max(std::fabs(fresnel_c(x, cfg) - target),
                                               std::fabs(fresnel_s(x, cfg) - target));
                   return residual(off, "larger deviation of C and S from the limit");
                 }});
  }
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gauss-trig", "quasi-gauss", "levy", "fresnel"};
  return names;
}

std::vector<CheckTask> suite_tasks(std::string_view suite) {
  std::vector<CheckTask> t;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "gauss-trig") gauss_trig(t), known = true;
  if (all || suite == "quasi-gauss") quasi_gauss_suite(t), known = true;
  if (all || suite == "levy") levy_suite(t), known = true;
  if (all || suite == "fresnel") fresnel_suite(t), known = true;
  if (!known) {
    throw UsageError("unknown suite '" + std::string(suite) + "'; known: gauss-trig quasi-gauss levy fresnel all");
  }
  return t;
}

ValidationReport run_validation(std::string_view suite, const EvalConfig& cfg, std::optional<double> tolerance,
                                unsigned threads) {
  cfg.validate();
  const std::vector<CheckTask> tasks = suite_tasks(suite);
  std::vector<Check> checks(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const CheckTask& task = tasks[i];
      const double tol = tolerance.value_or(task.tolerance);
      try {
        const Measured m = task.run(cfg);
        checks[i] = make_check(task.name, task.paper_ref, m.computed, m.expected, tol, m.note);
      } catch (const std::exception& e) {
        checks[i] = failed_check(task.name, task.paper_ref, std::numeric_limits<double>::quiet_NaN(), tol,
                                 std::string("error: ") + e.what());
      }
      checks[i].gating = task.gating;
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  ValidationReport report;
  report.suite = std::string(suite);
  report.config = cfg;
  report.check_tolerance = tolerance;
  report.checks = std::move(checks);
  std::sort(report.checks.begin(), report.checks.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
  return report;
}

} // namespace umbral::cli
