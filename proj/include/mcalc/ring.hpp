#pragma once

#include <vector>

#include "mcalc/polynomial.hpp"

namespace mcalc {

/// A = k[x_1..x_n]/J, modelling the local ring of A at the origin. Every
/// generator of J has zero constant term.
class RingSpec {
 public:
  explicit RingSpec(PolyRingPtr base, std::vector<Polynomial> quotient = {});

  const PolyRingPtr& base() const { return base_; }
  const FieldSpec& field() const { return base_->field(); }
  const MonomialOrder& order() const { return base_->order(); }
  std::size_t nvars() const { return base_->nvars(); }
  const std::vector<std::string>& variables() const { return base_->variables(); }
  const std::vector<Polynomial>& quotient() const { return quotient_; }

  /// True when every quotient generator is homogeneous; then each component
  /// of V(J) passes through the origin.
  bool is_homogeneous() const;

  Polynomial zero() const { return Polynomial(base_); }
  Polynomial one() const { return Polynomial::integer(base_, 1); }
  Polynomial variable(std::size_t i) const { return Polynomial::variable(base_, i); }

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  PolyRingPtr base_;
  std::vector<Polynomial> quotient_;
};

}  // namespace mcalc
