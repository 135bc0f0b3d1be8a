#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mcalc/polynomial.hpp"

namespace mcalc {

struct VectorTerm {
  std::uint32_t position;
  Monomial mono;
  Scalar coeff;
};

/// Position-over-term: lower position index is larger; ties broken by the
/// ring's monomial order.
inline std::strong_ordering compare_pot(const MonomialOrder& order, std::uint32_t pa,
                                        const Monomial& a, std::uint32_t pb, const Monomial& b) {
  if (pa != pb) return pa < pb ? std::strong_ordering::greater : std::strong_ordering::less;
  return order.compare(a, b);
}

/// Sparse element of R^rank; terms nonzero and strictly decreasing under
/// position-over-term.
class ModuleVector {
 public:
  ModuleVector(PolyRingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}

  static ModuleVector from_terms(PolyRingPtr ring, std::size_t rank, std::vector<VectorTerm> terms);
  static ModuleVector from_components(PolyRingPtr ring, const std::vector<Polynomial>& components);
  static ModuleVector unit(PolyRingPtr ring, std::size_t rank, std::size_t position);
  /// `f` placed at `position` of R^rank.
  static ModuleVector embed(const Polynomial& f, std::size_t rank, std::size_t position);

  const PolyRingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<VectorTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const VectorTerm& leading_term() const { return terms_.front(); }

  Polynomial component(std::size_t position) const;
  std::vector<Polynomial> components() const;

  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector operator-() const;
  ModuleVector scaled(const Scalar& c) const;
  ModuleVector times_term(const Monomial& m, const Scalar& c) const;
  ModuleVector times(const Polynomial& f) const;
  ModuleVector monic() const;

  ModuleVector& operator+=(const ModuleVector& o) { return *this = *this + o; }
  ModuleVector& operator-=(const ModuleVector& o) { return *this = *this - o; }

  /// this -= c * m * g.
  void subtract_multiple(const ModuleVector& g, const Monomial& m, const Scalar& c);
  /// Removes and returns the leading term; precondition: nonzero.
  VectorTerm pop_leading();
  /// Appends a term smaller than every present term.
  void push_trailing(VectorTerm t);

  /// Keeps positions [offset, offset + count), renumbered from zero.
  ModuleVector slice(std::size_t offset, std::size_t count) const;
  /// Same entries moved to positions + offset inside R^new_rank.
  ModuleVector shifted(std::size_t offset, std::size_t new_rank) const;

  /// "(x, 0, y^2)"; rank-1 vectors print as a bare polynomial inside parens.
  std::string to_string() const;

  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

 private:
  ModuleVector(PolyRingPtr ring, std::size_t rank, std::vector<VectorTerm> sorted)
      : ring_(std::move(ring)), rank_(rank), terms_(std::move(sorted)) {}

  PolyRingPtr ring_;
  std::size_t rank_;
  std::vector<VectorTerm> terms_;
};

/// Linear combination sum_i coeffs[i] * vectors[i]; all vectors share a rank.
ModuleVector combine(const PolyRingPtr& ring, std::size_t rank,
                     const std::vector<Polynomial>& coeffs,
                     const std::vector<ModuleVector>& vectors);

}  // namespace mcalc
