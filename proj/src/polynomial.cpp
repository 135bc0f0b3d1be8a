#include "mcalc/polynomial.hpp"

#include <algorithm>

#include "mcalc/error.hpp"

namespace mcalc {

PolyRing::PolyRing(FieldSpec field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), variables_(std::move(variables)), order_(order) {
  if (variables_.size() > kMaxVariables)
    throw Error(ErrorCode::kInvalidArgument,
                "at most " + std::to_string(kMaxVariables) + " variables are supported");
  if (order_.kind() == OrderKind::kBlock && order_.split() > variables_.size())
    throw Error(ErrorCode::kInvalidArgument, "block split exceeds the variable count");
}

PolyRingPtr make_poly_ring(FieldSpec field, std::vector<std::string> variables,
                           MonomialOrder order) {
  return std::make_shared<const PolyRing>(field, std::move(variables), order);
}

bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  if (!same_ring(a, b)) throw Error(ErrorCode::kRingMismatch, "polynomials from different rings");
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  for (const auto& t : terms)
    if (!(t.coeff.field() == ring->field()))
      throw Error(ErrorCode::kFieldMismatch, "coefficient outside " + ring->field().name());
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::constant(PolyRingPtr ring, const Scalar& c) {
  return monomial(std::move(ring), Monomial(), c);
}

Polynomial Polynomial::integer(PolyRingPtr ring, long n) {
  const Scalar c = Scalar::from_integer(ring->field(), n);
  return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error(ErrorCode::kInvalidArgument, "variable index out of range");
  const Scalar one = Scalar::one(ring->field());
  return monomial(std::move(ring), Monomial::variable(index), one);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Monomial& m, const Scalar& c) {
  if (!(c.field() == ring->field()))
    throw Error(ErrorCode::kFieldMismatch, "coefficient outside " + ring->field().name());
  if (c.is_zero()) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), std::vector<Term>{Term{m, c}});
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar::zero(field());
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                        const MonomialOrder& order, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
      continue;
    }
    const auto c = order.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Scalar s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  return Polynomial(ring_, merge(terms_, o.terms_, ring_->order(), false));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  return Polynomial(ring_, merge(terms_, o.terms_, ring_->order(), true));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono, -t.coeff});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.terms_.size() == 1) return times_term(o.terms_[0].mono, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.times_term(terms_[0].mono, terms_[0].coeff);
  std::vector<Term> products;
  products.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) products.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(ring_, std::move(products));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  return times_term(Monomial(), c);
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplicative order: the product keeps the term order.
  for (const auto& t : terms_) out.push_back(Term{t.mono * m, t.coeff * c});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = integer(ring_, 1);
  Polynomial base = *this;
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1) result = result * base;
    if (exponent > 1) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff))
      return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

void append_term(std::string& out, const Scalar& coeff, const std::string& mono_text,
                 bool first) {
  const bool negative = coeff.is_negative();
  const Scalar magnitude = negative ? -coeff : coeff;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const bool unit_monomial = mono_text == "1";
  if (unit_monomial) {
    out += magnitude.is_compound() ? "(" + magnitude.to_string() + ")" : magnitude.to_string();
    return;
  }
  if (!magnitude.is_one()) {
    out += magnitude.is_compound() ? "(" + magnitude.to_string() + ")" : magnitude.to_string();
    out += "*";
  }
  out += mono_text;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    append_term(out, terms_[i].coeff, monomial_to_string(terms_[i].mono, ring_->variables()),
                i == 0);
  return out;
}

}  // namespace mcalc
