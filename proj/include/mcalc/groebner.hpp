#pragma once

#include <optional>
#include <vector>

#include "mcalc/ring.hpp"

namespace mcalc {

/// Reduced Groebner basis of (gens) + J over the ambient ring of a RingSpec.
class GroebnerBasis {
 public:
  GroebnerBasis(RingSpec ring, std::vector<Polynomial> generators)
      : ring_(std::move(ring)), generators_(std::move(generators)) {}

  const RingSpec& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::vector<Monomial> leading_monomials() const;
  /// 1 lies in the ideal.
  bool is_unit() const;

 private:
  RingSpec ring_;
  std::vector<Polynomial> generators_;
};

/// Quotient generators of `ring` are always folded in.
GroebnerBasis buchberger(const RingSpec& ring, const std::vector<Polynomial>& gens);

struct NormalForm {
  Polynomial remainder;
  /// f = sum witness[i] * gb.generators()[i] + remainder, when requested.
  std::optional<std::vector<Polynomial>> witness;
};

NormalForm normal_form(const Polynomial& f, const GroebnerBasis& gb, bool with_witness = false);

bool is_member(const Polynomial& f, const GroebnerBasis& gb);

/// Monomials outside the leading-term ideal, in ascending order; nullopt
/// when there are infinitely many.
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb);

/// Krull dimension of R/I; throws kUnitIdeal when 1 is in I.
std::size_t krull_dimension(const GroebnerBasis& gb);

/// True iff every variable is nilpotent modulo I, i.e. V(I) is the origin.
/// Throws kNotZeroDimensional unless standard_monomials(gb) is finite.
bool origin_support_check(const GroebnerBasis& gb);

/// Self-check: every S-polynomial of the basis reduces to zero.
bool verify_groebner(const GroebnerBasis& gb);

namespace monomial_ideal {

/// Standard monomials of the monomial ideal generated by `leads` in `nvars`
/// variables, or nullopt when infinite.
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leads,
                                                        std::size_t nvars);
std::optional<std::size_t> count_standard_monomials(const std::vector<Monomial>& leads,
                                                    std::size_t nvars);
/// Largest set of variables containing the support of no generator; -1 when
/// 1 is a generator.
int dimension(const std::vector<Monomial>& leads, std::size_t nvars);

}  // namespace monomial_ideal

}  // namespace mcalc
