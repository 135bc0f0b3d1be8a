#include "mcalc/session.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mcalc/error.hpp"

namespace mcalc {

namespace {

enum class Tok { kNumber, kIdent, kSymbol, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what) {
  std::string where = line ? "line " + std::to_string(line) + ", column " : "column ";
  throw Error(ErrorCode::kParseError, where + std::to_string(column) + ": " + what);
}

std::vector<Token> tokenize(std::string_view s, std::size_t line, std::size_t base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    const std::size_t col = base_column + i;
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::kNumber, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::kIdent, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (std::string_view("+-*/^(),[]").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Tok::kSymbol, std::string(1, static_cast<char>(c)), col});
      ++i;
    } else {
      fail(line, col, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Tok::kEnd, "", base_column + s.size()});
  return out;
}

class Parser {
 public:
  Parser(PolyRingPtr ring, std::string_view text, std::size_t line = 0, std::size_t base_column = 1)
      : ring_(std::move(ring)), line_(line), tokens_(tokenize(text, line, base_column)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().kind == Tok::kEnd; }
  bool accept(std::string_view sym) {
    if (peek().kind == Tok::kSymbol && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(std::string_view sym) {
    if (!accept(sym)) error("expected '" + std::string(sym) + "'");
  }
  void expect_end() {
    if (!at_end()) error("unexpected '" + peek().text + "'");
  }
  [[noreturn]] void error(const std::string& what) const { fail(line_, peek().column, what); }

  std::string identifier() {
    if (peek().kind != Tok::kIdent) error("expected a name");
    return tokens_[pos_++].text;
  }

  std::size_t integer() {
    if (peek().kind != Tok::kNumber) error("expected an integer");
    const auto& t = tokens_[pos_];
    if (t.text.size() > 9) error("integer too large");
    ++pos_;
    return std::stoul(t.text);
  }

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept("-")) negate = true;
    else accept("+");
    Polynomial first = term();
    acc = negate ? -first : first;
    for (;;) {
      if (accept("+")) acc += term();
      else if (accept("-")) acc -= term();
      else break;
    }
    return acc;
  }

  std::vector<Polynomial> list() {
    std::vector<Polynomial> out;
    const bool bracketed = accept("[");
    if (bracketed && accept("]")) return out;
    if (!bracketed && at_end()) return out;
    out.push_back(expression());
    while (accept(",")) out.push_back(expression());
    if (bracketed) expect("]");
    return out;
  }

  ModuleVector vector(std::size_t rank) {
    expect("(");
    std::vector<Polynomial> comps;
    comps.push_back(expression());
    while (accept(",")) comps.push_back(expression());
    if (comps.size() != rank)
      error("vector has " + std::to_string(comps.size()) + " entries, rank is " + std::to_string(rank));
    expect(")");
    ModuleVector v(ring_, rank);
    for (std::size_t i = 0; i < rank; ++i) v += ModuleVector::embed(comps[i], rank, i);
    return v;
  }

 private:
  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      if (accept("*")) {
        acc *= power();
      } else if (peek().kind == Tok::kSymbol && peek().text == "/") {
        ++pos_;
        const std::size_t col = peek().column;
        Polynomial d = power();
        if (d.is_zero()) fail(line_, col, "division by zero");
        if (!d.is_constant()) fail(line_, col, "division by a non-constant");
        acc = acc.scaled(d.constant_term().inverse());
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept("^")) {
      const std::size_t e = integer();
      if (e > 65535) error("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    const Token& t = peek();
    if (t.kind == Tok::kNumber) {
      ++pos_;
      return Polynomial::constant(ring_, Scalar::from_integer(ring_->field(), mpz_class(t.text)));
    }
    if (t.kind == Tok::kIdent) {
      ++pos_;
      const auto& vars = ring_->variables();
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == t.text) return Polynomial::variable(ring_, i);
      if (t.text == "t" && ring_->field().kind() == FieldKind::kRationalFunctions)
        return Polynomial::constant(ring_, Scalar::transcendental(ring_->field()));
      fail(line_, t.column, "unknown variable '" + t.text + "'");
    }
    if (accept("(")) {
      Polynomial inner = expression();
      expect(")");
      return inner;
    }
    if (t.kind == Tok::kEnd) error("unexpected end of input");
    error("unexpected '" + t.text + "'");
  }

  PolyRingPtr ring_;
  std::size_t line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::string join(const std::vector<Polynomial>& ps) {
  std::string out = "[";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += ps[i].to_string();
  }
  return out + "]";
}

struct Line {
  std::size_t number;
  std::string key;   // "field", "vars", "order", "quotient", "module", "sequence"
  std::string name;  // module/sequence name
  std::string value;
  std::size_t value_column;
};

}  // namespace

Polynomial parse_polynomial(const PolyRingPtr& ring, std::string_view text) {
  Parser p(ring, text);
  Polynomial f = p.expression();
  p.expect_end();
  return f;
}

std::vector<Polynomial> parse_polynomial_list(const PolyRingPtr& ring, std::string_view text) {
  Parser p(ring, text);
  auto out = p.list();
  p.expect_end();
  return out;
}

FieldSpec parse_field(std::string_view text) {
  text = trim(text);
  if (text == "Q") return FieldSpec::rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    std::string_view rest = text.substr(1);
    bool functions = false;
    if (rest.size() > 3 && rest.substr(rest.size() - 3) == "(t)") {
      functions = true;
      rest.remove_suffix(3);
    }
    if (!rest.empty() && rest.size() <= 18 &&
        std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const std::uint64_t p = std::stoull(std::string(rest));
      return functions ? FieldSpec::rational_functions(p) : FieldSpec::prime_field(p);
    }
  }
  throw Error(ErrorCode::kUnknownFieldKind, "unknown field '" + std::string(text) + "' (use Q, Fp or Fp(t))");
}

MonomialOrder parse_order(std::string_view text) {
  text = trim(text);
  if (text == "grevlex") return MonomialOrder::grevlex();
  if (text == "lex") return MonomialOrder::lex();
  if (text.starts_with("block(") && text.ends_with(")")) {
    const std::string_view digits = text.substr(6, text.size() - 7);
    if (!digits.empty() && digits.size() < 3 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return MonomialOrder::block(std::stoul(std::string(digits)));
  }
  throw Error(ErrorCode::kParseError, "unknown order '" + std::string(text) + "'");
}

const NamedModule* Session::find_module(std::string_view name) const {
  for (const auto& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}

const NamedSequence* Session::find_sequence(std::string_view name) const {
  for (const auto& s : sequences)
    if (s.name == name) return &s;
  return nullptr;
}

FPModule Session::module(std::string_view name) const {
  if (name.empty()) return FPModule::free(ring, 1);
  const NamedModule* m = find_module(name);
  if (!m) throw Error(ErrorCode::kInvalidArgument, "no module named '" + std::string(name) + "'");
  return FPModule(ring, m->rank, m->relations);
}

Session parse_session(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string_view::npos) fail(number, 1, "expected 'key = value'");
    std::string_view lhs = trim(raw.substr(0, eq));
    std::string_view value = raw.substr(eq + 1);
    std::size_t value_column = eq + 2;
    while (!value.empty() && std::isspace(static_cast<unsigned char>(value.front()))) {
      value.remove_prefix(1);
      ++value_column;
    }
    value = trim(value);
    Line l{number, "", "", std::string(value), value_column};
    const auto space = lhs.find_first_of(" \t");
    const std::string_view head = lhs.substr(0, space);
    const std::size_t key_column = raw.find(head) + 1;
    if (head == "module" || head == "sequence") {
      if (space == std::string_view::npos) fail(number, key_column, "missing name after '" + std::string(head) + "'");
      const std::string_view name = trim(lhs.substr(space));
      if (!is_identifier(name)) fail(number, key_column, "invalid name '" + std::string(name) + "'");
      l.key = std::string(head);
      l.name = std::string(name);
    } else if (head == "field" || head == "vars" || head == "order" || head == "quotient") {
      if (space != std::string_view::npos) fail(number, key_column, "unexpected text after key");
      l.key = std::string(head);
    } else {
      fail(number, key_column, "unknown key '" + std::string(lhs) + "'");
    }
    lines.push_back(std::move(l));
  }

  const Line* field_line = nullptr;
  const Line* vars_line = nullptr;
  const Line* order_line = nullptr;
  const Line* quotient_line = nullptr;
  for (const auto& l : lines) {
    const Line** slot = l.key == "field"      ? &field_line
                        : l.key == "vars"     ? &vars_line
                        : l.key == "order"    ? &order_line
                        : l.key == "quotient" ? &quotient_line
                                              : nullptr;
    if (!slot) continue;
    if (*slot) fail(l.number, 1, "duplicate key '" + l.key + "'");
    *slot = &l;
  }
  if (!field_line) fail(number, 1, "missing 'field'");
  if (!vars_line) fail(number, 1, "missing 'vars'");

  const FieldSpec field = parse_field(field_line->value);
  std::vector<std::string> vars;
  {
    std::string_view rest = vars_line->value;
    std::size_t col = vars_line->value_column;
    while (true) {
      const auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      const std::string_view name = trim(item);
      if (!is_identifier(name)) fail(vars_line->number, col, "invalid variable name '" + std::string(name) + "'");
      if (name == "t" && field.kind() == FieldKind::kRationalFunctions)
        fail(vars_line->number, col, "'t' is reserved for the transcendental of " + field.name());
      if (std::find(vars.begin(), vars.end(), name) != vars.end())
        fail(vars_line->number, col, "duplicate variable '" + std::string(name) + "'");
      vars.emplace_back(name);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
      col += comma + 1;
    }
  }
  MonomialOrder order = MonomialOrder::grevlex();
  if (order_line) {
    try {
      order = parse_order(order_line->value);
    } catch (const Error&) {
      fail(order_line->number, order_line->value_column, "unknown order '" + order_line->value + "'");
    }
  }
  PolyRingPtr base;
  try {
    base = make_poly_ring(field, vars, order);
  } catch (const Error& e) {
    fail(vars_line->number, vars_line->value_column, e.what());
  }

  std::vector<Polynomial> quotient;
  if (quotient_line) {
    Parser p(base, quotient_line->value, quotient_line->number, quotient_line->value_column);
    if (p.peek().kind != Tok::kSymbol || p.peek().text != "[") p.error("expected '['");
    quotient = p.list();
    p.expect_end();
    for (const auto& f : quotient)
      if (!f.constant_term().is_zero())
        fail(quotient_line->number, quotient_line->value_column,
             "quotient generator " + f.to_string() + " has a nonzero constant term");
  }
  Session session{RingSpec(base, quotient), {}, {}};

  for (const auto& l : lines) {
    if (l.key == "module") {
      if (session.find_module(l.name)) fail(l.number, 1, "duplicate module '" + l.name + "'");
      Parser p(base, l.value, l.number, l.value_column);
      if (p.identifier() != "rank") fail(l.number, l.value_column, "expected 'rank'");
      const std::size_t rank = p.integer();
      if (rank > 64) p.error("rank too large");
      NamedModule m{l.name, rank, {}};
      p.expect("[");
      if (!p.accept("]")) {
        m.relations.push_back(p.vector(rank));
        while (p.accept(",")) m.relations.push_back(p.vector(rank));
        p.expect("]");
      }
      p.expect_end();
      session.modules.push_back(std::move(m));
    } else if (l.key == "sequence") {
      if (session.find_sequence(l.name)) fail(l.number, 1, "duplicate sequence '" + l.name + "'");
      Parser p(base, l.value, l.number, l.value_column);
      if (p.peek().kind != Tok::kSymbol || p.peek().text != "[") p.error("expected '['");
      NamedSequence s{l.name, p.list()};
      p.expect_end();
      session.sequences.push_back(std::move(s));
    }
  }
  return session;
}

Session load_session(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read session file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str());
}

std::string serialize_session(const Session& s) {
  std::ostringstream out;
  out << "field = " << s.ring.field().name() << '\n';
  out << "vars = ";
  for (std::size_t i = 0; i < s.ring.nvars(); ++i) out << (i ? ", " : "") << s.ring.variables()[i];
  out << '\n';
  out << "order = " << s.ring.order().name() << '\n';
  out << "quotient = " << join(s.ring.quotient()) << '\n';
  for (const auto& m : s.modules) {
    out << "module " << m.name << " = rank " << m.rank << " [";
    for (std::size_t i = 0; i < m.relations.size(); ++i) {
      if (i) out << ", ";
      out << m.relations[i].to_string();
    }
    out << "]\n";
  }
  for (const auto& q : s.sequences) out << "sequence " << q.name << " = " << join(q.elements) << '\n';
  return out.str();
}

}  // namespace mcalc
