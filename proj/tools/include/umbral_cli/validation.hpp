#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/config.hpp"
#include "umbral_cli/report.hpp"

namespace umbral::cli {

/// What a check measured. `expected` is the reference value (closed form or
/// quadrature oracle, whichever is not under test).
struct Measured {
  double computed = 0.0;
  double expected = 0.0;
  std::string note;
};

struct CheckTask {
  std::string name;
  std::string paper_ref;
  double tolerance = 0.0;
  bool gating = true;
  std::function<Measured(const EvalConfig&)> run;
};

/// gauss-trig, quasi-gauss, levy, fresnel.
const std::vector<std::string>& suite_names();

/// Tasks of one suite, or of every suite for "all". Throws UsageError for
/// an unknown suite.
std::vector<CheckTask> suite_tasks(std::string_view suite);

/// Runs tasks on up to `threads` workers (0: hardware concurrency). A task
/// that throws becomes a failed check carrying the message. `tolerance`
/// replaces every declared tolerance when given. Checks come back sorted by name.
ValidationReport run_validation(std::string_view suite, const EvalConfig& cfg,
                                std::optional<double> tolerance = std::nullopt, unsigned threads = 0);

} // namespace umbral::cli
