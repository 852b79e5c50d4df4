#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "umbral/config.hpp"

namespace umbral::cli {

/// One computed-vs-expected comparison. pass is rel_err <= tolerance, where
/// rel_err is abs_err / |expected|, or abs_err itself when expected is zero.
/// Non-gating checks are reported but never affect the exit status.
struct Check {
  std::string name;
  std::string paper_ref;
  double computed = 0.0;
  double expected = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool gating = true;
  std::string note;

  friend bool operator==(const Check& a, const Check& b);
};

/// Fills the error fields and pass flag from computed, expected and tolerance.
Check make_check(std::string name, std::string paper_ref, double computed, double expected, double tolerance,
                 std::string note = {});

/// A check whose evaluation threw: computed is NaN, pass is false.
Check failed_check(std::string name, std::string paper_ref, double expected, double tolerance, std::string note);

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Failed checks that do not gate the exit status.
  std::size_t informational_failures = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct ValidationReport {
  std::string suite;
  EvalConfig config;
  std::optional<double> check_tolerance;
  /// Sorted by name.
  std::vector<Check> checks;

  Summary summary() const;
  /// True when every gating check passed.
  bool gating_passed() const;

  friend bool operator==(const ValidationReport& a, const ValidationReport& b);
};

/// JSON text of the report. Numbers carry 17 significant digits; NaN becomes
/// null and infinities the strings "inf" and "-inf".
std::string emit_json(const ValidationReport& report);

/// Inverse of emit_json. Throws std::runtime_error on malformed input.
ValidationReport parse_json(const std::string& text);

/// %.17g, with nan/inf spelled out; the one number format of every CLI output.
std::string format_number(double v);

} // namespace umbral::cli
