#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mcalc {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with cached total degree. Entries past the ring's
/// variable count are always zero.
class Monomial {
 public:
  Monomial() = default;

  /// Throws kInvalidArgument on too many variables or exponent overflow.
  static Monomial from_exponents(std::span<const std::uint32_t> exps);
  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::vector<std::uint32_t> exponents(std::size_t nvars) const;

  Monomial operator*(const Monomial& o) const;
  /// Precondition: o divides *this.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  /// Number of distinct variables with positive exponent; the index of the
  /// single such variable is written to `index` when the result is 1.
  std::size_t support_size(std::size_t* index = nullptr) const;

  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

enum class OrderKind { kGrevlex, kLex, kBlock };

/// Global monomial orders only: 1 is the minimum.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::kGrevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::kLex, 0); }
  /// Grevlex on variables [0, split), grevlex on the rest; the first block
  /// is eliminated.
  static MonomialOrder block(std::size_t split) { return MonomialOrder(OrderKind::kBlock, split); }

  OrderKind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::size_t split) : kind_(kind), split_(split) {}

  OrderKind kind_;
  std::size_t split_;
};

}  // namespace mcalc
