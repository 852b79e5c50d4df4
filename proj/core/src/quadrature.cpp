#include "umbral/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "umbral/errors.hpp"

namespace umbral::quad {
namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452, 0.930157491355708226001207180059508,
    0.865063366688984510732096688423493, 0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784, 0.294392862701460198131126603103866,
    0.148874338981631210884826001129720, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390, 0.054755896574351996031381300244580,
    0.075039674810919952767043140916190, 0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525634784, 0.134709217311473325928054001771707, 0.142775938577060080797094273138717,
    0.147739104901338491374841515972068, 0.149445554002916905664936468389821,
};
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697, 0.219086362515982043995534934228163,
    0.269266719309996355091226921569469, 0.295524224714752870173892994651338,
};

constexpr double epmach = std::numeric_limits<double>::epsilon();
constexpr double uflow = std::numeric_limits<double>::min();

struct Segment {
  double a;
  double b;
  double value;
  double err;
  double resabs; // integral of |f|, for the rounding floor
  bool operator<(const Segment& o) const noexcept { return err < o.err; }
};

double checked(const Integrand& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << "quadrature: integrand is not finite at x = " << x << " (value " << v << ")";
    throw QuadratureError(msg.str());
  }
  return v;
}

Segment gauss_kronrod21(const Integrand& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double dhlgth = std::fabs(hlgth);
  const double fc = checked(f, centr);
  double resg = 0.0;
  double resk = wgk[10] * fc;
  double resabs = std::fabs(resk);
  std::array<double, 10> fv1{};
  std::array<double, 10> fv2{};
  for (int j = 0; j < 5; ++j) {
    const int jtw = 2 * j + 1;
    const double absc = hlgth * xgk[jtw];
    const double f1 = checked(f, centr - absc);
    const double f2 = checked(f, centr + absc);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += wg[j] * (f1 + f2);
    resk += wgk[jtw] * (f1 + f2);
    resabs += wgk[jtw] * (std::fabs(f1) + std::fabs(f2));
  }
  for (int j = 0; j < 5; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = hlgth * xgk[jtwm1];
    const double f1 = checked(f, centr - absc);
    const double f2 = checked(f, centr + absc);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += wgk[jtwm1] * (f1 + f2);
    resabs += wgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
  }
  const double reskh = resk * 0.5;
  double resasc = wgk[10] * std::fabs(fc - reskh);
  for (int j = 0; j < 10; ++j) resasc += wgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
  const double result = resk * hlgth;
  resabs *= dhlgth;
  resasc *= dhlgth;
  double abserr = std::fabs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  if (resabs > uflow / (50.0 * epmach)) abserr = std::max(epmach * 50.0 * resabs, abserr);
  return {a, b, result, abserr, resabs};
}

constexpr std::size_t gk_points = 21;

// Adaptive integration against an explicit absolute floor. Returns
// converged = false instead of throwing; callers decide.
QuadResult integrate(const Integrand& f, double a, double b, double rel_tol, double abs_tol,
                     std::size_t max_segments) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod21(f, a, b);
  out.evaluations = gk_points;
  double total = first.value;
  double total_err = first.err;
  double total_abs = first.resabs;
  heap.push(first);
  double frozen_err = 0.0; // error of segments too narrow to split further
  // Cancelling integrands cannot be resolved below a few ulps of int |f|.
  auto target = [&] { return std::max({rel_tol * std::fabs(total), abs_tol, 200.0 * epmach * total_abs}); };
  while (total_err > target()) {
    if (heap.empty() || heap.size() >= max_segments) {
      out.value = total;
      out.err_estimate = total_err;
      out.converged = false;
      return out;
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (std::fabs(worst.b - worst.a) <= 100.0 * epmach * std::max(std::fabs(mid), uflow)) {
      frozen_err += worst.err; // rounding limit; keep its contribution as is
      if (frozen_err > target()) {
        out.value = total;
        out.err_estimate = total_err;
        out.converged = false;
        return out;
      }
      continue;
    }
    const Segment left = gauss_kronrod21(f, worst.a, mid);
    const Segment right = gauss_kronrod21(f, mid, worst.b);
    out.evaluations += 2 * gk_points;
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    total_abs += left.resabs + right.resabs - worst.resabs;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum from the segments to shed accumulated update rounding.
  double sum = 0.0;
  double err = frozen_err;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().err;
    heap.pop();
  }
  out.value = frozen_err > 0.0 ? total : sum;
  out.err_estimate = err;
  out.converged = true;
  return out;
}

[[noreturn]] void throw_unconverged(const char* what, const QuadResult& r) {
  std::ostringstream msg;
  msg << what << ": subdivision budget exhausted (value " << r.value << ", error estimate " << r.err_estimate
      << ", " << r.evaluations << " evaluations)";
  throw QuadratureError(msg.str());
}

// Tail of a half-line integral beyond `split`, by unit panels in v with
// s = split * e^v. `head_scale` is the magnitude the tail is judged against.
QuadResult tail_panels(const Integrand& f, double split, double head_value, const EvalConfig& cfg) {
  constexpr int max_panels = 600;
  QuadResult out;
  std::vector<double> contrib;
  const Integrand g = [&](double v) {
    const double s = split * std::exp(v);
    return f(s) * s;
  };
  double total = 0.0;
  double err = 0.0;
  for (int k = 0; k < max_panels; ++k) {
    const double scale = std::fabs(head_value + total);
    const double abs_floor = std::max(0.1 * cfg.quad_rel_tol * scale, 0.1 * cfg.abs_tol);
    const QuadResult p = integrate(g, k, k + 1.0, cfg.quad_rel_tol, abs_floor, cfg.quad_max_subdivisions);
    out.evaluations += p.evaluations;
    if (!p.converged) throw_unconverged("semi_infinite_quad (tail panel)", p);
    total += p.value;
    err += p.err_estimate;
    contrib.push_back(p.value);

    const double tol = std::max(cfg.quad_rel_tol * std::fabs(head_value + total), cfg.abs_tol);
    const std::size_t n = contrib.size();
    if (n >= 2 && std::fabs(contrib[n - 1]) <= 0.1 * tol && std::fabs(contrib[n - 2]) <= 0.1 * tol) {
      out.value = total;
      out.err_estimate = err;
      out.converged = true;
      return out;
    }
    if (n >= 4) {
      const double q1 = contrib[n - 1] / contrib[n - 2];
      const double q2 = contrib[n - 2] / contrib[n - 3];
      const double q3 = contrib[n - 3] / contrib[n - 4];
      const bool steady = q1 > 0.0 && q1 < 0.995 && std::fabs(q1 - q2) <= 0.01 * q1 && std::fabs(q2 - q3) <= 0.03 * q2;
      if (steady) {
        const double remainder = contrib[n - 1] * q1 / (1.0 - q1);
        // Drift of the ratio bounds the remainder's own error.
        const double rem_err = std::fabs(remainder) * std::max(std::fabs(q1 - q2), std::fabs(q2 - q3)) / (1.0 - q1);
        if (rem_err <= tol) {
          out.value = total + remainder;
          out.err_estimate = err + rem_err;
          out.converged = true;
          return out;
        }
      }
    }
    if (n >= 30 && std::fabs(contrib[n - 1]) >= std::fabs(contrib[n - 11]) && std::fabs(contrib[n - 1]) > tol) {
      std::ostringstream msg;
      msg << "semi_infinite_quad: integrand shows no decay beyond s = " << split * std::exp(static_cast<double>(k));
      throw TailError(msg.str());
    }
  }
  throw TailError("semi_infinite_quad: tail did not settle within the panel budget");
}

// Wynn epsilon extrapolation of a sequence of partial sums. Returns the
// deepest even-column entry and the change from the previous one.
std::pair<double, double> wynn_epsilon(const std::vector<double>& s) {
  const std::size_t n = s.size();
  if (n < 3) return {s.back(), n >= 2 ? std::fabs(s[n - 1] - s[n - 2]) : std::fabs(s.back())};
  std::vector<double> prev(n + 1, 0.0); // column k-1
  std::vector<double> cur(s.begin(), s.end()); // column k
  double best = s.back();
  double best_prev = s[n - 2];
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<double> next(n - k);
    for (std::size_t i = 0; i + k < n; ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0) return {cur[i + 1], 0.0};
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0) {
      if (cur.size() >= 2) {
        best_prev = cur[cur.size() - 2];
        best = cur.back();
      } else if (!cur.empty()) {
        best_prev = best;
        best = cur.back();
      }
    }
  }
  return {best, std::fabs(best - best_prev)};
}

} // namespace

QuadResult adaptive_quad(const Integrand& f, double a, double b, const EvalConfig& cfg) {
  cfg.validate();
  const QuadResult r = integrate(f, a, b, cfg.quad_rel_tol, cfg.abs_tol, cfg.quad_max_subdivisions);
  if (!r.converged) throw_unconverged("adaptive_quad", r);
  return r;
}

QuadResult semi_infinite_quad(const Integrand& f, const EvalConfig& cfg, double split) {
  cfg.validate();
  if (!(split > 0.0)) throw DomainError("semi_infinite_quad: split point must be positive");
  const QuadResult head = integrate(f, 0.0, split, cfg.quad_rel_tol, cfg.abs_tol, cfg.quad_max_subdivisions);
  if (!head.converged) throw_unconverged("semi_infinite_quad (head)", head);
  const QuadResult tail = tail_panels(f, split, head.value, cfg);
  return {head.value + tail.value, head.err_estimate + tail.err_estimate, head.evaluations + tail.evaluations,
          true};
}

QuadResult half_line_quad(const Integrand& f, double a, const EvalConfig& cfg, double split) {
  return semi_infinite_quad([&](double s) { return f(a + s); }, cfg, split);
}

QuadResult whole_line_quad(const Integrand& f, const EvalConfig& cfg, double split) {
  const QuadResult right = semi_infinite_quad(f, cfg, split);
  const QuadResult left = semi_infinite_quad([&](double s) { return f(-s); }, cfg, split);
  return {right.value + left.value, right.err_estimate + left.err_estimate, right.evaluations + left.evaluations,
          true};
}

QuadResult principal_value_quad(const Integrand& f, double x0, double window, const EvalConfig& cfg) {
  cfg.validate();
  constexpr std::array<double, 3> eps = {1e-2, 1e-3, 1e-4};
  if (!(window > eps[0])) throw DomainError("principal_value_quad: window must exceed the largest excision");
  QuadResult out;
  // The one-sided pieces are larger than their difference, so the piece tolerance is
  // tightened by the observed cancellation ratio until the extrapolated value meets quad_rel_tol.
  double piece_rel = cfg.quad_rel_tol;
  for (int pass = 0; pass < 3; ++pass) {
    std::array<double, 3> excised{};
    double err = 0.0, magnitude = 0.0;
    for (std::size_t i = 0; i < eps.size(); ++i) {
      const QuadResult lo = integrate(f, x0 - window, x0 - eps[i], piece_rel, cfg.abs_tol, cfg.quad_max_subdivisions);
      const QuadResult hi = integrate(f, x0 + eps[i], x0 + window, piece_rel, cfg.abs_tol, cfg.quad_max_subdivisions);
      out.evaluations += lo.evaluations + hi.evaluations;
      if (!lo.converged) throw_unconverged("principal_value_quad", lo);
      if (!hi.converged) throw_unconverged("principal_value_quad", hi);
      excised[i] = lo.value + hi.value;
      err = std::max(err, lo.err_estimate + hi.err_estimate);
      magnitude = std::max(magnitude, std::fabs(lo.value) + std::fabs(hi.value));
    }
    // I(eps) = PV - c1 eps - c3 eps^3 - ...; ratios of 10 between excisions.
    const double r1a = (10.0 * excised[1] - excised[0]) / 9.0;
    const double r1b = (10.0 * excised[2] - excised[1]) / 9.0;
    const double r2 = (1000.0 * r1b - r1a) / 999.0;
    out.value = r2;
    out.err_estimate = std::fabs(r2 - r1b) + 2.0 * err;
    out.converged = true;
    const double target = std::max(cfg.quad_rel_tol * std::fabs(r2), cfg.abs_tol);
    if (out.err_estimate <= target) break;
    const double ratio = std::max(std::fabs(r2), cfg.abs_tol) / std::max(magnitude, cfg.abs_tol);
    const double next = std::max(0.1 * piece_rel * std::min(1.0, ratio), 1e-14);
    if (next >= piece_rel) break;
    piece_rel = next;
  }
  return out;
}

QuadResult oscillatory_tail_quad(const Integrand& f, double a, const std::function<double(std::size_t)>& zero,
                                 const EvalConfig& cfg) {
  cfg.validate();
  constexpr std::size_t max_intervals = 400;
  constexpr std::size_t min_intervals = 8;
  QuadResult out;
  std::vector<double> partial;
  double left = a;
  double sum = 0.0;
  double quad_err = 0.0;
  double last_estimate = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 0; k < max_intervals; ++k) {
    const double right = zero(k);
    if (!(right > left)) throw DomainError("oscillatory_tail_quad: zeros must increase beyond a");
    const QuadResult piece = integrate(f, left, right, cfg.quad_rel_tol, 0.01 * cfg.abs_tol, cfg.quad_max_subdivisions);
    out.evaluations += piece.evaluations;
    if (!piece.converged) throw_unconverged("oscillatory_tail_quad", piece);
    sum += piece.value;
    quad_err += piece.err_estimate;
    partial.push_back(sum);
    left = right;
    if (partial.size() < min_intervals) continue;
    // Extrapolate from a sliding window; long tables amplify rounding.
    const std::size_t window = std::min<std::size_t>(partial.size(), 24);
    const std::vector<double> recent(partial.end() - static_cast<std::ptrdiff_t>(window), partial.end());
    const auto [estimate, change] = wynn_epsilon(recent);
    const double tol = std::max(cfg.quad_rel_tol * std::fabs(estimate), cfg.abs_tol);
    if (std::isfinite(last_estimate) && std::fabs(estimate - last_estimate) <= tol && change <= tol) {
      out.value = estimate;
      out.err_estimate = std::fabs(estimate - last_estimate) + change + quad_err;
      out.converged = true;
      return out;
    }
    last_estimate = estimate;
  }
  out.value = last_estimate;
  out.err_estimate = std::numeric_limits<double>::infinity();
  throw_unconverged("oscillatory_tail_quad", out);
}

} // namespace umbral::quad
