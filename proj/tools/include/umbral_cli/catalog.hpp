#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "umbral/config.hpp"
#include "umbral/result.hpp"

namespace umbral::cli {

/// Bad command line: unknown function, malformed or missing parameter.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Params = std::map<std::string, double, std::less<>>;

struct ParamSpec {
  std::string name;
  std::optional<double> default_value; // required when empty
  bool integer = false;
  double minimum = -1e300;
};

/// What one evaluation produced. Most functions have a single named value;
/// complex ones report "re" and "im".
struct Output {
  std::vector<std::pair<std::string, double>> values;
  double err_estimate = 0.0;
  std::size_t work = 1;
  Method method = Method::closed_form;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::vector<ParamSpec> params;
  std::function<Output(double, const Params&, const EvalConfig&)> eval;
};

const std::vector<CatalogEntry>& catalog();

/// Throws UsageError naming the known functions when `name` is not one.
const CatalogEntry& find_function(std::string_view name);

/// Parses `key=value` tokens against the entry's parameter list, filling
/// defaults. Throws UsageError on unknown keys, bad numbers, missing
/// required keys, non-integers where integers are needed.
Params parse_params(const CatalogEntry& entry, const std::vector<std::string>& tokens);

/// Parses a real number, accepting the whole token only.
double parse_number(std::string_view token, std::string_view what);

} // namespace umbral::cli
