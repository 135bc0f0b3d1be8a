#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mcalc/fpmodule.hpp"
#include "mcalc/ring.hpp"

namespace mcalc {

/// Parses `x^2 + 1/2*x*y - (t + 1)*y` over the ring's field. `t` denotes the
/// transcendental of F_p(t); division is allowed only by nonzero constants.
/// Errors are kParseError with the column (1-based) of the offending token.
Polynomial parse_polynomial(const PolyRingPtr& ring, std::string_view text);

/// Comma-separated list, optionally wrapped in brackets; "" and "[]" are empty.
std::vector<Polynomial> parse_polynomial_list(const PolyRingPtr& ring, std::string_view text);

/// "Q", "F7", "F2(t)".
FieldSpec parse_field(std::string_view text);

/// "grevlex", "lex", "block(k)".
MonomialOrder parse_order(std::string_view text);

struct NamedModule {
  std::string name;
  std::size_t rank;
  std::vector<ModuleVector> relations;
};

struct NamedSequence {
  std::string name;
  std::vector<Polynomial> elements;
};

/// Contents of a session file:
///
///   field = F2
///   vars = x, y
///   order = grevlex
///   quotient = [x^2 + x*y + y^2]
///   module M = rank 2 [(x, 0), (0, y)]
///   sequence s = [x, y]
struct Session {
  RingSpec ring;
  std::vector<NamedModule> modules;
  std::vector<NamedSequence> sequences;

  const NamedModule* find_module(std::string_view name) const;
  const NamedSequence* find_sequence(std::string_view name) const;
  /// The named module as an A-module, or A itself when `name` is empty.
  FPModule module(std::string_view name) const;
};

Session parse_session(std::string_view text);
Session load_session(const std::string& path);

/// Canonical form; parse_session(serialize_session(s)) reproduces s.
std::string serialize_session(const Session& session);

}  // namespace mcalc
