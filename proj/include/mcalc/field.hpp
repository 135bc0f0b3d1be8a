#pragma once

#include <cstdint>
#include <string>

namespace mcalc {

enum class FieldKind { kRationals, kPrimeField, kRationalFunctions };

bool is_prime(std::uint64_t n);

/// Coefficient field: Q, F_p, or F_p(t) with a single transcendental t.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::kRationals, 0); }
  /// Throws kBadCharacteristic unless p is a prime below 2^31.
  static FieldSpec prime_field(std::uint64_t p);
  static FieldSpec rational_functions(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return characteristic_; }

  /// "Q", "F2", "F2(t)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint32_t characteristic)
      : kind_(kind), characteristic_(characteristic) {}

  FieldKind kind_;
  std::uint32_t characteristic_;
};

}  // namespace mcalc
