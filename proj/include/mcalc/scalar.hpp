#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mcalc/field.hpp"

namespace mcalc {

namespace detail {

struct Residue {
  std::uint32_t value;
  std::uint32_t modulus;
  friend bool operator==(const Residue&, const Residue&) = default;
};

// Dense univariate polynomial over F_p, coefficients from the constant term
// upward, no trailing zeros.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::uint32_t modulus, std::vector<std::uint32_t> coeffs);

  static FpPoly constant(std::uint32_t modulus, std::uint32_t c);
  static FpPoly variable(std::uint32_t modulus);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint32_t leading() const { return coeffs_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
  std::uint32_t modulus() const { return modulus_; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(std::uint32_t c) const;
  FpPoly negated() const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
  FpPoly monic() const;
  std::string to_string() const;

  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  void trim();

  std::uint32_t modulus_ = 2;
  std::vector<std::uint32_t> coeffs_;
};

FpPoly gcd(FpPoly a, FpPoly b);

// Element of F_p(t): reduced fraction with monic denominator.
class RationalFunction {
 public:
  RationalFunction(FpPoly num, FpPoly den);

  const FpPoly& numerator() const { return num_; }
  const FpPoly& denominator() const { return den_; }
  std::uint32_t modulus() const { return num_.modulus(); }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  FpPoly num_;
  FpPoly den_;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

}  // namespace detail

/// Exact field element in canonical form; equality is representational.
class Scalar {
 public:
  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_integer(const FieldSpec& field, const mpz_class& n);
  /// Throws kDivisionByZero for den == 0 (or den == 0 mod p).
  static Scalar from_fraction(const FieldSpec& field, const mpz_class& num,
                              const mpz_class& den);
  /// The symbol t of F_p(t); kInvalidArgument for other fields.
  static Scalar transcendental(const FieldSpec& field);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;
  /// True when the printed form starts with a minus sign (Q only).
  bool is_negative() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// "5/6", "3", "(t^2 + 1)/(t + 1)".
  std::string to_string() const;
  /// True when to_string() needs parentheses to act as a factor.
  bool is_compound() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.rep_ == b.rep_; }

 private:
  using Rep = std::variant<mpq_class, detail::Residue, detail::RationalFunction>;
  explicit Scalar(Rep rep) : rep_(std::move(rep)) {}
  void check_same_field(const Scalar& o) const;

  Rep rep_;
};

}  // namespace mcalc
