#include "umbral_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace umbral::cli {
namespace {

bool same_number(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

// The report is emitted by hand so numbers keep 17 significant digits;
// nlohmann/json is used for string escaping and for parsing.
std::string json_number(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  return format_number(v);
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

double read_number(const nlohmann::json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw std::runtime_error("malformed validation report: number expected, got \"" + s + "\"");
  }
  return j.get<double>();
}

} // namespace

bool operator==(const Check& a, const Check& b) {
  return a.name == b.name && a.paper_ref == b.paper_ref && same_number(a.computed, b.computed) &&
         same_number(a.expected, b.expected) && same_number(a.abs_err, b.abs_err) &&
         same_number(a.rel_err, b.rel_err) && same_number(a.tolerance, b.tolerance) && a.pass == b.pass &&
         a.gating == b.gating && a.note == b.note;
}

bool operator==(const ValidationReport& a, const ValidationReport& b) {
  const auto& ca = a.config;
  const auto& cb = b.config;
  const bool tol_equal = a.check_tolerance.has_value() == b.check_tolerance.has_value() &&
                         (!a.check_tolerance || same_number(*a.check_tolerance, *b.check_tolerance));
  return a.suite == b.suite && ca.rel_tol == cb.rel_tol && ca.abs_tol == cb.abs_tol && ca.max_terms == cb.max_terms &&
         ca.quad_rel_tol == cb.quad_rel_tol && ca.quad_max_subdivisions == cb.quad_max_subdivisions && tol_equal &&
         a.checks == b.checks;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Check make_check(std::string name, std::string paper_ref, double computed, double expected, double tolerance,
                 std::string note) {
  Check c;
  c.name = std::move(name);
  c.paper_ref = std::move(paper_ref);
  c.computed = computed;
  c.expected = expected;
  c.tolerance = tolerance;
  c.note = std::move(note);
  if (std::isinf(computed) && computed == expected) {
    c.abs_err = 0.0;
  } else {
    c.abs_err = std::fabs(computed - expected);
  }
  c.rel_err = expected == 0.0 || std::isinf(expected) ? c.abs_err : c.abs_err / std::fabs(expected);
  c.pass = c.rel_err <= tolerance; // false for NaN
  return c;
}

Check failed_check(std::string name, std::string paper_ref, double expected, double tolerance, std::string note) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  Check c;
  c.name = std::move(name);
  c.paper_ref = std::move(paper_ref);
  c.computed = nan;
  c.expected = expected;
  c.abs_err = nan;
  c.rel_err = nan;
  c.tolerance = tolerance;
  c.pass = false;
  c.note = std::move(note);
  return c;
}

Summary ValidationReport::summary() const {
  Summary s;
  s.total = checks.size();
  for (const auto& c : checks) {
    if (c.pass) {
      ++s.passed;
    } else {
      ++s.failed;
      if (!c.gating) ++s.informational_failures;
    }
  }
  return s;
}

bool ValidationReport::gating_passed() const {
  for (const auto& c : checks) {
    if (c.gating && !c.pass) return false;
  }
  return true;
}

std::string emit_json(const ValidationReport& r) {
  const Summary s = r.summary();
  std::ostringstream o;
  o << "{\n";
  o << "  \"suite\": " << json_string(r.suite) << ",\n";
  o << "  \"config\": {\n";
  o << "    \"rel_tol\": " << json_number(r.config.rel_tol) << ",\n";
  o << "    \"abs_tol\": " << json_number(r.config.abs_tol) << ",\n";
  o << "    \"max_terms\": " << r.config.max_terms << ",\n";
  o << "    \"quad_rel_tol\": " << json_number(r.config.quad_rel_tol) << ",\n";
  o << "    \"quad_max_subdivisions\": " << r.config.quad_max_subdivisions << ",\n";
  o << "    \"check_tolerance\": " << (r.check_tolerance ? json_number(*r.check_tolerance) : "null") << "\n";
  o << "  },\n";
  o << "  \"summary\": {\"total\": " << s.total << ", \"passed\": " << s.passed << ", \"failed\": " << s.failed
    << ", \"informational_failures\": " << s.informational_failures << "},\n";
  o << "  \"checks\": [";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const Check& c = r.checks[i];
    o << (i ? ",\n" : "\n");
    o << "    {\"name\": " << json_string(c.name) << ", \"paper_ref\": " << json_string(c.paper_ref)
      << ", \"computed\": " << json_number(c.computed) << ", \"expected\": " << json_number(c.expected)
      << ", \"abs_err\": " << json_number(c.abs_err) << ", \"rel_err\": " << json_number(c.rel_err)
      << ", \"tolerance\": " << json_number(c.tolerance) << ", \"pass\": " << (c.pass ? "true" : "false")
      << ", \"gating\": " << (c.gating ? "true" : "false") << ", \"note\": " << json_string(c.note) << "}";
  }
  o << (r.checks.empty() ? "]\n" : "\n  ]\n");
  o << "}\n";
  return o.str();
}

ValidationReport parse_json(const std::string& text) {
  ValidationReport r;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    r.suite = j.at("suite").get<std::string>();
    const auto& cfg = j.at("config");
    r.config.rel_tol = read_number(cfg.at("rel_tol"));
    r.config.abs_tol = read_number(cfg.at("abs_tol"));
    r.config.max_terms = cfg.at("max_terms").get<std::size_t>();
    r.config.quad_rel_tol = read_number(cfg.at("quad_rel_tol"));
    r.config.quad_max_subdivisions = cfg.at("quad_max_subdivisions").get<std::size_t>();
    if (!cfg.at("check_tolerance").is_null()) r.check_tolerance = read_number(cfg.at("check_tolerance"));
    for (const auto& jc : j.at("checks")) {
      Check c;
      c.name = jc.at("name").get<std::string>();
      c.paper_ref = jc.at("paper_ref").get<std::string>();
      c.computed = read_number(jc.at("computed"));
      c.expected = read_number(jc.at("expected"));
      c.abs_err = read_number(jc.at("abs_err"));
      c.rel_err = read_number(jc.at("rel_err"));
      c.tolerance = read_number(jc.at("tolerance"));
      c.pass = jc.at("pass").get<bool>();
      c.gating = jc.at("gating").get<bool>();
      c.note = jc.at("note").get<std::string>();
      r.checks.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed validation report: ") + e.what());
  }
  return r;
}

} // namespace umbral::cli
