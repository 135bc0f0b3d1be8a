#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mcalc/field.hpp"
#include "mcalc/monomial.hpp"
#include "mcalc/scalar.hpp"

namespace mcalc {

/// Ambient polynomial ring k[x_1..x_n] with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(FieldSpec field, std::vector<std::string> variables, MonomialOrder order);

  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  FieldSpec field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(FieldSpec field, std::vector<std::string> variables,
                           MonomialOrder order);

/// Pointer-equal or structurally equal.
bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b);
/// Throws kRingMismatch unless same_ring(a, b).
void require_same_ring(const PolyRingPtr& a, const PolyRingPtr& b);

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial; terms are nonzero and strictly decreasing in the
/// ring's order.
class Polynomial {
 public:
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);
  static Polynomial constant(PolyRingPtr ring, const Scalar& c);
  static Polynomial integer(PolyRingPtr ring, long n);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);
  static Polynomial monomial(PolyRingPtr ring, const Monomial& m, const Scalar& c);

  const PolyRingPtr& ring() const { return ring_; }
  const FieldSpec& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Scalar& leading_coefficient() const { return terms_.front().coeff; }
  Scalar constant_term() const;
  std::uint32_t total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned exponent) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Canonical ASCII form, e.g. "x^2 + x*y + y^2".
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(PolyRingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

/// Formats `coeff * mono` as the i-th summand (i == 0 has no leading " + ").
void append_term(std::string& out, const Scalar& coeff, const std::string& mono_text,
                 bool first);

}  // namespace mcalc
