#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "umbral/config.hpp"

namespace umbral::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_validation_failed = 1,
  exit_usage = 2,
  exit_numerical = 3,
};

enum class Format { text, csv, json };

struct Options {
  EvalConfig cfg;
  std::string out; // empty: standard output
  std::optional<Format> format;
  std::optional<double> check_tolerance;
};

/// Numeric table with named columns, stored row by row.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// `steps` abscissae from xmin to xmax inclusive; a single row sits at xmin.
std::vector<double> table_abscissae(double xmin, double xmax, std::size_t steps);

/// Builds the table for `what` (a catalog function, "fig1" or "fig3").
/// fig3 takes n=N or n=A..B for the derivative orders and normalizes each
/// column to unit peak magnitude. Throws UsageError on bad input.
Table make_table(const std::string& what, double xmin, double xmax, std::size_t steps,
                 const std::vector<std::string>& params, const EvalConfig& cfg);

/// Header row then one line per row, %.17g, LF endings.
void write_csv(std::ostream& os, const Table& t);
/// {"columns": [...], "rows": [[...], ...]}.
void write_table_json(std::ostream& os, const Table& t);

int cmd_eval(const std::string& fn, const std::string& x, const std::vector<std::string>& params,
             const Options& opt, std::ostream& out);
int cmd_table(const std::vector<std::string>& args, const Options& opt, std::ostream& out);
int cmd_validate(const std::string& suite, const Options& opt, std::ostream& out);
int cmd_moments(const std::vector<std::string>& params, const Options& opt, std::ostream& out);

/// Parses argv, dispatches and maps every failure to an ExitCode; messages go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace umbral::cli
