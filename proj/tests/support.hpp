#pragma once

#include <string>
#include <vector>

#include "mcalc/session.hpp"

namespace mcalc::testing {

inline RingSpec ring(const std::string& field, const std::string& vars,
                     const std::string& quotient = "[]", const std::string& order = "grevlex") {
  return parse_session("field = " + field + "\nvars = " + vars + "\norder = " + order +
                       "\nquotient = " + quotient + "\n")
      .ring;
}

inline Polynomial poly(const RingSpec& r, const std::string& text) {
  return parse_polynomial(r.base(), text);
}

inline std::vector<Polynomial> polys(const RingSpec& r, const std::string& text) {
  return parse_polynomial_list(r.base(), text);
}

inline ModuleVector vec(const RingSpec& r, const std::vector<std::string>& entries) {
  std::vector<Polynomial> comps;
  for (const auto& e : entries) comps.push_back(poly(r, e));
  return ModuleVector::from_components(r.base(), comps);
}

inline std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace mcalc::testing
