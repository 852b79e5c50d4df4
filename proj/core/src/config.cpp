#include "umbral/config.hpp"

#include <sstream>

#include "umbral/errors.hpp"
#include "umbral/result.hpp"

namespace umbral {

void EvalConfig::validate() const {
  std::ostringstream bad;
  if (!(rel_tol > 0.0)) bad << " rel_tol=" << rel_tol;
  if (!(abs_tol > 0.0)) bad << " abs_tol=" << abs_tol;
  if (!(quad_rel_tol > 0.0)) bad << " quad_rel_tol=" << quad_rel_tol;
  if (max_terms < 8) bad << " max_terms=" << max_terms;
  if (quad_max_subdivisions < 16) bad << " quad_max_subdivisions=" << quad_max_subdivisions;
  if (!bad.str().empty()) throw DomainError("invalid EvalConfig:" + bad.str());
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
  case Method::closed_form: return "closed_form";
  case Method::series: return "series";
  case Method::asymptotic: return "asymptotic";
  case Method::recurrence: return "recurrence";
  case Method::quadrature: return "quadrature";
  }
  return "unknown";
}

} // namespace umbral
