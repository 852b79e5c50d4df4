#include "umbral_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "umbral/errors.hpp"
#include "umbral/gauss_trig.hpp"
#include "umbral/quasi_gauss.hpp"
#include "umbral_cli/catalog.hpp"
#include "umbral_cli/report.hpp"
#include "umbral_cli/validation.hpp"

namespace umbral::cli {
namespace {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "\"" + format_number(v) + "\""; }

/// Runs `emit` against the --out file when one is given, else against `out`.
template <class Emit>
void with_output(const Options& opt, std::ostream& out, Emit emit) {
  if (opt.out.empty()) {
    emit(out);
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw IoError("cannot open '" + opt.out + "' for writing");
  emit(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + opt.out + "'");
}

std::size_t parse_steps(const std::string& s) {
  const double v = parse_number(s, "steps");
  if (v < 1 || v != std::floor(v) || v > 1e7) throw UsageError("steps must be a positive integer, got " + s);
  return static_cast<std::size_t>(v);
}

std::pair<unsigned, unsigned> parse_orders(const std::vector<std::string>& params) {
  std::pair<unsigned, unsigned> range{1, 4};
  for (const auto& p : params) {
    if (p.rfind("n=", 0) != 0) throw UsageError("fig3 takes only n=N or n=A..B, got '" + p + "'");
    const std::string v = p.substr(2);
    const auto dots = v.find("..");
    const auto as_order = [&](const std::string& s) {
      const double d = parse_number(s, "derivative order");
      if (d < 1 || d > 40 || d != std::floor(d)) throw UsageError("derivative orders must be integers in [1, 40]");
      return static_cast<unsigned>(d);
    };
    if (dots == std::string::npos) {
      range = {1, as_order(v)};
    } else {
      range = {as_order(v.substr(0, dots)), as_order(v.substr(dots + 2))};
    }
    if (range.first > range.second) throw UsageError("empty derivative range '" + v + "'");
  }
  return range;
}

void print_eval_text(std::ostream& os, const std::string& fn, double x, const Params& params, const Output& r) {
  os << "function: " << fn << '\n' << "x: " << format_number(x) << '\n';
  for (const auto& [k, v] : params) os << k << ": " << format_number(v) << '\n';
  for (const auto& [k, v] : r.values) os << k << ": " << format_number(v) << '\n';
  os << "err_estimate: " << format_number(r.err_estimate) << '\n';
  os << "work: " << r.work << '\n';
  os << "method: " << to_string(r.method) << '\n';
}

void print_eval_json(std::ostream& os, const std::string& fn, double x, const Params& params, const Output& r) {
  os << "{\"function\": " << json_string(fn) << ", \"x\": " << json_number(x) << ", \"params\": {";
  bool first = true;
  for (const auto& [k, v] : params) {
    os << (first ? "" : ", ") << json_string(k) << ": " << json_number(v);
    first = false;
  }
  os << "}, \"values\": {";
  first = true;
  for (const auto& [k, v] : r.values) {
    os << (first ? "" : ", ") << json_string(k) << ": " << json_number(v);
    first = false;
  }
  os << "}, \"err_estimate\": " << json_number(r.err_estimate) << ", \"work\": " << r.work
     << ", \"method\": " << json_string(std::string(to_string(r.method))) << "}\n";
}

const CatalogEntry& moments_entry() {
  static const CatalogEntry entry{"moments",
                                  "quasi-Gaussian moments M_(m,d)",
                                  {{"n", std::nullopt, true, 1},
                                   {"sigma", 1.0, false},
                                   {"d", 0.0, false},
                                   {"max_m", 6.0, true, 0}},
                                  {}};
  return entry;
}

} // namespace

std::vector<double> table_abscissae(double xmin, double xmax, std::size_t steps) {
  std::vector<double> xs(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    // Weighted form keeps symmetric ranges symmetric, so the midpoint is exact.
    xs[i] = steps == 1 ? xmin
                       : (xmin * static_cast<double>(steps - 1 - i) + xmax * static_cast<double>(i)) /
                             static_cast<double>(steps - 1);
  }
  return xs;
}

Table make_table(const std::string& what, double xmin, double xmax, std::size_t steps,
                 const std::vector<std::string>& params, const EvalConfig& cfg) {
  if (!std::isfinite(xmin) || !std::isfinite(xmax) || !(xmin <= xmax)) {
    throw UsageError("table range needs finite xmin <= xmax");
  }
  const std::vector<double> xs = table_abscissae(xmin, xmax, steps);
  Table t;
  if (what == "fig1") {
    if (!params.empty()) throw UsageError("fig1 takes no parameters");
    t.columns = {"x", "cg", "sg"};
    for (double x : xs) t.rows.push_back({x, cg(x), sg(x, cfg)});
    return t;
  }
  if (what == "fig3") {
    const auto [lo, hi] = parse_orders(params);
    t.columns = {"x"};
    for (unsigned m = lo; m <= hi; ++m) t.columns.push_back("sg_d" + std::to_string(m));
    std::vector<double> peak(hi - lo + 1, 0.0);
    for (double x : xs) {
      std::vector<double> row{x};
      for (unsigned m = lo; m <= hi; ++m) {
        row.push_back(sg_derivative(m, x, cfg));
        peak[m - lo] = std::max(peak[m - lo], std::fabs(row.back()));
      }
      t.rows.push_back(std::move(row));
    }
    for (auto& row : t.rows) {
      for (std::size_t j = 0; j < peak.size(); ++j) {
        if (peak[j] > 0.0) row[j + 1] /= peak[j];
      }
    }
    return t;
  }
  const CatalogEntry& entry = find_function(what);
  const Params p = parse_params(entry, params);
  t.columns = {"x"};
  for (double x : xs) {
    const Output r = entry.eval(x, p, cfg);
    if (t.columns.size() == 1) {
      for (const auto& [name, v] : r.values) t.columns.push_back(r.values.size() == 1 ? what : what + "_" + name);
    }
    std::vector<double> row{x};
    for (const auto& [name, v] : r.values) row.push_back(v);
    t.rows.push_back(std::move(row));
  }
  if (t.columns.size() == 1) t.columns.push_back(what);
  return t;
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << format_number(row[j]);
    os << '\n';
  }
}

void write_table_json(std::ostream& os, const Table& t) {
  os << "{\"columns\": [";
  for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? ", " : "") << json_string(t.columns[j]);
  os << "], \"rows\": [";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    os << (i ? ",\n  [" : "\n  [");
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) os << (j ? ", " : "") << json_number(t.rows[i][j]);
    os << ']';
  }
  os << (t.rows.empty() ? "]}\n" : "\n]}\n");
}

int cmd_eval(const std::string& fn, const std::string& x_text, const std::vector<std::string>& params,
             const Options& opt, std::ostream& out) {
  const CatalogEntry& entry = find_function(fn);
  const double x = parse_number(x_text, "x");
  if (!std::isfinite(x)) throw UsageError("x must be finite");
  const Params p = parse_params(entry, params);
  const Output r = entry.eval(x, p, opt.cfg);
  const Format f = opt.format.value_or(Format::text);
  if (f == Format::csv) throw UsageError("eval prints text or json");
  with_output(opt, out, [&](std::ostream& os) {
    if (f == Format::json) {
      print_eval_json(os, fn, x, p, r);
    } else {
      print_eval_text(os, fn, x, p, r);
    }
  });
  return exit_ok;
}

int cmd_table(const std::vector<std::string>& args, const Options& opt, std::ostream& out) {
  if (args.size() < 4) throw UsageError("table needs <function|fig1|fig3> <xmin> <xmax> <steps> [key=value ...]");
  const double xmin = parse_number(args[1], "xmin");
  const double xmax = parse_number(args[2], "xmax");
  const std::size_t steps = parse_steps(args[3]);
  const std::vector<std::string> params(args.begin() + 4, args.end());
  const Table t = make_table(args[0], xmin, xmax, steps, params, opt.cfg);
  const Format f = opt.format.value_or(Format::csv);
  if (f == Format::text) throw UsageError("table writes csv or json");
  with_output(opt, out, [&](std::ostream& os) {
    if (f == Format::json) {
      write_table_json(os, t);
    } else {
      write_csv(os, t);
    }
  });
  return exit_ok;
}

int cmd_validate(const std::string& suite, const Options& opt, std::ostream& out) {
  const ValidationReport report = run_validation(suite, opt.cfg, opt.check_tolerance);
  const Format f = opt.format.value_or(Format::text);
  if (f == Format::csv) throw UsageError("validate writes a text summary or a json report");
  const bool json_to_stdout = opt.out.empty() && f == Format::json;
  if (!opt.out.empty()) {
    with_output(opt, out, [&](std::ostream& os) { os << emit_json(report); });
  }
  if (json_to_stdout) {
    out << emit_json(report);
  } else {
    for (const Check& c : report.checks) {
      const char* tag = c.pass ? "PASS" : (c.gating ? "FAIL" : "INFO");
      out << tag << "  " << c.name << "  rel_err=" << format_number(c.rel_err)
          << "  tol=" << format_number(c.tolerance);
      if (!c.pass && !c.note.empty()) out << "  (" << c.note << ")";
      out << '\n';
    }
    const Summary s = report.summary();
    out << s.total << " checks: " << s.passed << " passed, " << s.failed << " failed";
    if (s.informational_failures) out << " (" << s.informational_failures << " informational)";
    out << '\n';
  }
  return report.gating_passed() ? exit_ok : exit_validation_failed;
}

int cmd_moments(const std::vector<std::string>& params, const Options& opt, std::ostream& out) {
  const Params p = parse_params(moments_entry(), params);
  const QuasiGaussParams q{static_cast<unsigned>(p.at("n")), p.at("sigma"), p.at("d")};
  q.validate();
  const auto max_m = static_cast<unsigned>(p.at("max_m"));
  std::vector<MomentResult> rows;
  for (unsigned m = 0; m <= max_m; ++m) rows.push_back(moment(m, q, opt.cfg));
  const Format f = opt.format.value_or(Format::text);
  with_output(opt, out, [&](std::ostream& os) {
    if (f == Format::csv) {
      os << "m,value,finite\n";
      for (unsigned m = 0; m <= max_m; ++m) {
        os << m << ',' << format_number(rows[m].value) << ',' << (rows[m].finite ? 1 : 0) << '\n';
      }
    } else if (f == Format::json) {
      os << "{\"n\": " << q.n << ", \"sigma\": " << json_number(q.sigma) << ", \"d\": " << json_number(q.d)
         << ", \"moments\": [";
      for (unsigned m = 0; m <= max_m; ++m) {
        os << (m ? ",\n  " : "\n  ") << "{\"m\": " << m << ", \"value\": " << json_number(rows[m].value)
           << ", \"finite\": " << (rows[m].finite ? "true" : "false")
           << ", \"condition\": " << json_string(rows[m].condition) << "}";
      }
      os << "\n]}\n";
    } else {
      os << "n=" << q.n << " sigma=" << format_number(q.sigma) << " d=" << format_number(q.d) << '\n';
      for (unsigned m = 0; m <= max_m; ++m) {
        os << "M_" << m << " = " << format_number(rows[m].value) << "  " << (rows[m].finite ? "finite" : "divergent")
           << "  " << rows[m].condition << '\n';
      }
    }
  });
  return exit_ok;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian trigonometric, quasi-Gaussian, stable and Fresnel functions", "umbral"};
  app.set_version_flag("--version", "umbral 0.1.0");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string format;
  double check_tol = 0.0;
  app.add_option("--rel-tol", opt.cfg.rel_tol, "relative tolerance of series and quadrature")->capture_default_str();
  app.add_option("--abs-tol", opt.cfg.abs_tol, "absolute tolerance floor")->capture_default_str();
  app.add_option("--max-terms", opt.cfg.max_terms, "series term budget")->capture_default_str();
  app.add_option("--out", opt.out, "write output to this file instead of standard output");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  auto* tol_opt = app.add_option("--check-tol", check_tol, "replace every validation tolerance");

  std::string fn, x;
  std::vector<std::string> eval_params;
  auto* eval = app.add_subcommand("eval", "evaluate one function: eval <function> <x> [key=value ...]");
  eval->add_option("function", fn, "catalog function")->required();
  eval->add_option("x", x, "abscissa")->required();
  eval->add_option("params", eval_params, "key=value parameters");

  std::vector<std::string> table_args;
  auto* table = app.add_subcommand(
      "table", "tabulate: table <function|fig1|fig3> <xmin> <xmax> <steps> [key=value ...]; fig3 takes n=A..B");
  table->add_option("args", table_args, "function, range, row count and parameters")->required();

  std::string suite;
  auto* validate = app.add_subcommand("validate", "run a validation suite: gauss-trig, quasi-gauss, levy, fresnel, all");
  validate->add_option("suite", suite, "suite name")->required();

  std::vector<std::string> moment_params;
  auto* moments = app.add_subcommand("moments", "quasi-Gaussian moments: moments n=N [sigma=] [d=] [max_m=]");
  moments->add_option("params", moment_params, "key=value parameters")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (!format.empty()) opt.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::text;
    if (*tol_opt) opt.check_tolerance = check_tol;
    opt.cfg.validate();
    if (*eval) return cmd_eval(fn, x, eval_params, opt, out);
    if (*table) return cmd_table(table_args, opt, out);
    if (*validate) return cmd_validate(suite, opt, out);
    return cmd_moments(moment_params, opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_usage;
  } catch (const PoleError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return exit_numerical;
  }
}

} // namespace umbral::cli
