#include <random>

#include "doctest.h"
#include "mcalc/error.hpp"
#include "mcalc/session.hpp"

using namespace mcalc;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("session files") {
  const auto s = parse_session("field = F2\nvars = x, y\norder = grevlex\nquotient = [x^2 + x*y + y^2]\n");
  CHECK(s.ring.field() == FieldSpec::prime_field(2));
  CHECK(s.ring.nvars() == 2);
  CHECK(s.ring.quotient().size() == 1);

  const auto u = parse_session("field = Q\nvars = x\nquotient = []\n");
  CHECK(u.ring.nvars() == 1);
  CHECK(u.ring.quotient().empty());
  CHECK(u.ring.order() == MonomialOrder::grevlex());

  CHECK(code_of([] { parse_session("field = F4\nvars = x\n"); }) == ErrorCode::kBadCharacteristic);
  CHECK(code_of([] { parse_session("field = R\nvars = x\n"); }) == ErrorCode::kUnknownFieldKind);
  CHECK(code_of([] { parse_session("field = Q\nvars = x\ncolour = red\n"); }) == ErrorCode::kParseError);
  CHECK(message_of([] { parse_session("field = Q\nvars = x\ncolour = red\n"); }).starts_with("line 3, column 1"));
  CHECK(message_of([] { parse_session("field = Q\nvars = x, y\nquotient = [x^2 + z]\n"); })
            .starts_with("line 3, column 19"));
  CHECK(code_of([] { parse_session("field = Q\nvars = x, x\n"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_session("field = Q\nvars = x\nvars = y\n"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_session("field = Q\n"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_session("field = Q\nvars = x\nquotient = [x + 1]\n"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_session("field = Q\nvars = x\norder = revlex\n"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_session("field = F2(t)\nvars = x, t\n"); }) == ErrorCode::kParseError);
}

TEST_CASE("modules and sequences") {
  const auto s = parse_session(
      "# comment line\n"
      "field = Q   # trailing comment\n"
      "vars = x, y\n"
      "module M = rank 2 [(x, 0), (y, x^2)]\n"
      "module Z = rank 0 []\n"
      "sequence s = [x, y + 1/2*x]\n"
      "sequence e = []\n");
  REQUIRE(s.find_module("M"));
  CHECK(s.find_module("M")->relations.size() == 2);
  CHECK(s.module("M").rank() == 2);
  CHECK(s.module("Z").rank() == 0);
  CHECK(s.find_sequence("s")->elements.size() == 2);
  CHECK(s.find_sequence("e")->elements.empty());
  CHECK(s.module("").rank() == 1);
  CHECK_THROWS_AS(s.module("N"), Error);
  CHECK(code_of([] { parse_session("field = Q\nvars = x\nmodule M = rank 2 [(x)]\n"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_session("field = Q\nvars = x\nsequence s = [x]\nsequence s = [x]\n"); }) ==
        ErrorCode::kParseError);
}

TEST_CASE("canonical serialisation round-trips") {
  const std::string messy =
      "vars = x,y,z\n"
      "quotient = [ y*x + 2*x*y , z^2 ]\n"
      "field = F5\n"
      "order = lex\n"
      "sequence q = [ x+y ]\n"
      "module N = rank 2 [ (x,y), (0 , z) ]\n";
  const auto s = parse_session(messy);
  const std::string canon = serialize_session(s);
  CHECK(canon ==
        "field = F5\nvars = x, y, z\norder = lex\nquotient = [3*x*y, z^2]\n"
        "module N = rank 2 [(x, y), (0, z)]\nsequence q = [x + y]\n");
  CHECK(serialize_session(parse_session(canon)) == canon);

  const std::string f2t = "field = F2(t)\nvars = x, y\norder = block(1)\nquotient = [x^2 + t*y^2]\n";
  CHECK(serialize_session(parse_session(f2t)) == f2t);
  const std::string frac = "field = Q\nvars = x\norder = grevlex\nquotient = [1/2*x^2 - 3/4*x]\n";
  CHECK(serialize_session(parse_session(frac)) == frac);
}

TEST_CASE("polynomial syntax") {
  const auto r = parse_session("field = F3(t)\nvars = x, y\n").ring;
  CHECK(parse_polynomial(r.base(), "(t^2 + 1)/(t + 1)*x").to_string() == "((t^2 + 1)/(t + 1))*x");
  CHECK(parse_polynomial(r.base(), "x/t").to_string() == "(1/t)*x");
  CHECK(code_of([&] { parse_polynomial(r.base(), "x/y"); }) == ErrorCode::kParseError);
  CHECK(code_of([&] { parse_polynomial(r.base(), "x/0"); }) == ErrorCode::kParseError);
  CHECK(code_of([&] { parse_polynomial(r.base(), "x^"); }) == ErrorCode::kParseError);
  CHECK(code_of([&] { parse_polynomial(r.base(), "x y"); }) == ErrorCode::kParseError);
  CHECK(code_of([&] { parse_polynomial(r.base(), "x $ y"); }) == ErrorCode::kParseError);
  CHECK(parse_polynomial_list(r.base(), "").empty());
  CHECK(parse_polynomial_list(r.base(), "[]").empty());
  CHECK(parse_polynomial_list(r.base(), "x, y, x*y").size() == 3);
}
