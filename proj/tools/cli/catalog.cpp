#include "umbral_cli/catalog.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "umbral/umbral.hpp"

namespace umbral::cli {
namespace {

Output single(const std::string& name, const Estimate& e) {
  return {{{name, e.value}}, e.err_estimate, e.work, e.method};
}

Output closed(const std::string& name, double v) { return {{{name, v}}, 0.0, 1, Method::closed_form}; }

Output from_series(const std::string& name, const SeriesResult<double>& s) {
  return {{{name, s.value}}, s.err_estimate, s.terms_used, Method::series};
}

Output complex_out(std::complex<double> z, const Estimate& im_part) {
  return {{{"re", z.real()}, {"im", z.imag()}}, im_part.err_estimate, im_part.work, im_part.method};
}

unsigned as_unsigned(const Params& p, const char* key) { return static_cast<unsigned>(p.find(key)->second); }
double get(const Params& p, const char* key) { return p.find(key)->second; }

ParamSpec real(std::string name, std::optional<double> def = std::nullopt) { return {std::move(name), def, false}; }
ParamSpec order(std::string name, std::optional<double> def, double minimum) {
  return {std::move(name), def, true, minimum};
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;
  c.push_back({"cg", "Gaussian cosine exp(-x^2)", {}, [](double x, const Params&, const EvalConfig&) {
                 return closed("cg", umbral::cg(x));
               }});
  c.push_back({"sg", "Gaussian sine (2/sqrt(pi)) F(x)", {}, [](double x, const Params&, const EvalConfig& cfg) {
                 return single("sg", sg_estimate(x, cfg));
               }});
  c.push_back({"eg", "cg(x) + i sg(x)", {}, [](double x, const Params&, const EvalConfig& cfg) {
                 return complex_out(umbral::eg(x, cfg), sg_estimate(x, cfg));
               }});
  c.push_back({"z", "Fried-Conte function i sqrt(pi) eg(x) on the real line", {},
               [](double x, const Params&, const EvalConfig& cfg) {
                 return complex_out(fried_conte_z(x, cfg), sg_estimate(x, cfg));
               }});
  c.push_back({"dawson", "Dawson integral F(x)", {}, [](double x, const Params&, const EvalConfig& cfg) {
                 return single("dawson", dawson_estimate(x, cfg));
               }});
  c.push_back({"erfi", "imaginary error function", {}, [](double x, const Params&, const EvalConfig& cfg) {
                 return closed("erfi", umbral::erfi(x, cfg));
               }});
  c.push_back({"gamma", "Euler Gamma", {}, [](double x, const Params&, const EvalConfig&) {
                 return closed("gamma", umbral::gamma(x));
               }});
  c.push_back({"sg_derivative", "m-th derivative of sg", {order("m", 1, 0)},
               [](double x, const Params& p, const EvalConfig& cfg) {
                 const unsigned m = as_unsigned(p, "m");
                 const Method how = std::fabs(x) <= 3.0 ? Method::series
                                    : std::fabs(x) < 6.0 ? Method::recurrence
                                                         : Method::asymptotic;
                 return Output{{{"sg_derivative", sg_derivative(m, x, cfg)}}, 0.0, 1, how};
               }});
  c.push_back({"cg_derivative", "m-th derivative of cg, (-1)^m H_m(x) exp(-x^2)", {order("m", 1, 0)},
               [](double x, const Params& p, const EvalConfig&) {
                 return closed("cg_derivative", umbral::cg_derivative(as_unsigned(p, "m"), x));
               }});
  c.push_back({"sg_antiderivative", "integral of sg over [0, x]", {},
               [](double x, const Params&, const EvalConfig& cfg) {
                 return single("sg_antiderivative", sg_antiderivative_estimate(x, cfg));
               }});
  c.push_back({"gauss_primitive", "integral of exp(-t^2) over [0, x]", {},
               [](double x, const Params&, const EvalConfig& cfg) {
                 return single("gauss_primitive", gauss_primitive_estimate(x, cfg));
               }});
  c.push_back({"kk_residual", "Kramers-Kronig residual at x", {}, [](double x, const Params&, const EvalConfig& cfg) {
                 return Output{{{"kk_residual", umbral::kk_residual(x, cfg)}}, 0.0, 1, Method::quadrature};
               }});
  c.push_back({"sg_alpha", "parametric Gaussian sine", {real("alpha")},
               [](double x, const Params& p, const EvalConfig& cfg) {
                 return closed("sg_alpha", umbral::sg_alpha(x, get(p, "alpha"), cfg));
               }});
  c.push_back({"quasi_gauss", "quasi-Gaussian e(-x^2|n)", {order("n", std::nullopt, 1)},
               [](double x, const Params& p, const EvalConfig& cfg) {
                 return single("quasi_gauss", quasi_gauss_estimate(x, as_unsigned(p, "n"), cfg));
               }});
  c.push_back({"quasi_gauss_derivative", "m-th derivative of e(-x^2|n)",
               {order("m", 1, 0), order("n", std::nullopt, 1)}, [](double x, const Params& p, const EvalConfig& cfg) {
                 const double v = umbral::quasi_gauss_derivative(as_unsigned(p, "m"), x, as_unsigned(p, "n"), cfg);
                 return Output{{{"quasi_gauss_derivative", v}}, 0.0, 1, Method::quadrature};
               }});
  c.push_back({"density", "quasi-Gaussian density F(x; sigma|n)", {order("n", std::nullopt, 1), real("sigma", 1.0)},
               [](double x, const Params& p, const EvalConfig& cfg) {
                 return closed("density", umbral::density(x, {as_unsigned(p, "n"), get(p, "sigma"), 0.0}, cfg));
               }});
  c.push_back({"e_nu", "e_nu(x|n) series", {real("nu", 0.0), order("n", std::nullopt, 1)},
               [](double x, const Params& p, const EvalConfig& cfg) {
                 return from_series("e_nu", umbral::e_nu(x, get(p, "nu"), as_unsigned(p, "n"), cfg));
               }});
  c.push_back({"levy", "one-sided stable density g_alpha(x)", {real("alpha")},
               [](double x, const Params& p, const EvalConfig& cfg) {
                 return single("levy", levy_density_estimate(x, get(p, "alpha"), cfg));
               }});
  c.push_back({"levy_modified", "modified stable density g_{alpha,nu}(x)", {real("alpha"), real("nu", 0.0)},
               [](double x, const Params& p, const EvalConfig& cfg) {
                 const QuadResult q = levy_contour_integral(x, {get(p, "alpha"), get(p, "nu")}, cfg);
                 return Output{{{"levy_modified", q.value}}, q.err_estimate, q.evaluations, Method::quadrature};
               }});
  c.push_back({"fresnel_c", "Fresnel cosine integral C(x)", {}, [](double x, const Params&, const EvalConfig& cfg) {
                 return single("fresnel_c", fresnel_c_estimate(x, cfg));
               }});
  c.push_back({"fresnel_s", "Fresnel sine integral S(x)", {}, [](double x, const Params&, const EvalConfig& cfg) {
                 return single("fresnel_s", fresnel_s_estimate(x, cfg));
               }});
  c.push_back({"hyp1f1", "1F1(a; c; x)", {real("a"), real("c")}, [](double x, const Params& p, const EvalConfig& cfg) {
                 return from_series("hyp1f1", umbral::hyp1f1(get(p, "a"), get(p, "c"), x, cfg));
               }});
  c.push_back({"hyp2f1", "2F1(a, b; c; x)", {real("a"), real("b"), real("c")},
               [](double x, const Params& p, const EvalConfig& cfg) {
                 return from_series("hyp2f1", umbral::hyp2f1(get(p, "a"), get(p, "b"), get(p, "c"), x, cfg));
               }});
  c.push_back({"hyp1f2", "1F2(a; b, c; x)", {real("a"), real("b"), real("c")},
               [](double x, const Params& p, const EvalConfig& cfg) {
                 return from_series("hyp1f2", umbral::hyp1f2(get(p, "a"), get(p, "b"), get(p, "c"), x, cfg));
               }});
  return c;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& find_function(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  std::ostringstream msg;
  msg << "unknown function '" << name << "'; known:";
  for (const auto& e : catalog()) msg << ' ' << e.name;
  throw UsageError(msg.str());
}

double parse_number(std::string_view token, std::string_view what) {
  const std::string s(token);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    std::ostringstream msg;
    msg << "cannot read " << what << " from '" << token << "'";
    throw UsageError(msg.str());
  }
  return v;
}

Params parse_params(const CatalogEntry& entry, const std::vector<std::string>& tokens) {
  Params out;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("parameter '" + tok + "' is not of the form key=value");
    const std::string key = tok.substr(0, eq);
    const ParamSpec* spec = nullptr;
    for (const auto& p : entry.params) {
      if (p.name == key) spec = &p;
    }
    if (!spec) throw UsageError("function '" + entry.name + "' takes no parameter '" + key + "'");
    const double v = parse_number(std::string_view(tok).substr(eq + 1), key);
    if (spec->integer && (v != std::floor(v) || v < spec->minimum || v > 1e6)) {
      std::ostringstream msg;
      msg << "parameter " << key << " must be an integer >= " << spec->minimum << ", got " << tok.substr(eq + 1);
      throw UsageError(msg.str());
    }
    out[key] = v;
  }
  for (const auto& p : entry.params) {
    if (out.count(p.name)) continue;
    if (!p.default_value) throw UsageError("function '" + entry.name + "' needs parameter " + p.name + "=<value>");
    out[p.name] = *p.default_value;
  }
  return out;
}

} // namespace umbral::cli
