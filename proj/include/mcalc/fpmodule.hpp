#pragma once

#include <optional>
#include <vector>

#include "mcalc/module_vector.hpp"
#include "mcalc/ring.hpp"

namespace mcalc {

/// Reduced Groebner basis (position-over-term) of the submodule of R^rank
/// spanned by `vectors` plus J * R^rank.
std::vector<ModuleVector> module_gb(const RingSpec& ring, const std::vector<ModuleVector>& vectors,
                                    std::size_t rank);

/// Same without folding in the quotient ideal.
std::vector<ModuleVector> module_gb_over_ambient(const PolyRingPtr& ring,
                                                 const std::vector<ModuleVector>& vectors,
                                                 std::size_t rank);

/// Module R^rank / N over A = R/J; N is stored as its reduced Groebner basis
/// and always contains J * R^rank.
class FPModule {
 public:
  FPModule(RingSpec ring, std::size_t rank, const std::vector<ModuleVector>& relations);

  static FPModule free(const RingSpec& ring, std::size_t rank);
  static FPModule zero(const RingSpec& ring) { return free(ring, 0); }
  /// R / (gens + J).
  static FPModule cyclic(const RingSpec& ring, const std::vector<Polynomial>& gens);

  const RingSpec& ring() const { return ring_; }
  const PolyRingPtr& base() const { return ring_.base(); }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleVector>& relations() const { return relations_; }

  bool is_zero() const;
  /// v lies in the relation submodule.
  bool is_relation(const ModuleVector& v) const;
  /// Normal form of v modulo the relations.
  ModuleVector reduce(const ModuleVector& v) const;
  /// Every generator is killed by f.
  bool annihilated_by(const Polynomial& f) const;

  /// Isomorphic presentation without generators that are expressible
  /// through later generators by a relation with constant leading term.
  FPModule pruned() const;

  friend bool operator==(const FPModule& a, const FPModule& b);

 private:
  RingSpec ring_;
  std::size_t rank_;
  std::vector<ModuleVector> relations_;
};

/// Map given by the images (columns in the target's R^g) of the source
/// generators; well-definedness is checked on construction.
class ModuleMap {
 public:
  ModuleMap(FPModule source, FPModule target, std::vector<ModuleVector> columns);

  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  const std::vector<ModuleVector>& columns() const { return columns_; }

  /// Image of a vector of the source's free cover.
  ModuleVector apply(const ModuleVector& v) const;

 private:
  FPModule source_;
  FPModule target_;
  std::vector<ModuleVector> columns_;
};

/// Generators of {c : sum c_i vectors[i] = 0} (Schreyer). Each returned
/// syzygy is checked to vanish exactly.
std::vector<ModuleVector> syzygies(const std::vector<ModuleVector>& vectors);

/// {v in span(K) : phi(v) in span(L)} for phi: R^a -> R^b given by `phi`
/// (a columns in R^b) and K in R^a. Returned as a reduced Groebner basis.
std::vector<ModuleVector> preimage_submodule(const PolyRingPtr& ring, std::size_t a, std::size_t b,
                                             const std::vector<ModuleVector>& K,
                                             const std::vector<ModuleVector>& L,
                                             const std::vector<ModuleVector>& phi);

/// {v in R^a : phi(v) in span(L)}.
std::vector<ModuleVector> preimage_submodule(const PolyRingPtr& ring, std::size_t a, std::size_t b,
                                             const std::vector<ModuleVector>& L,
                                             const std::vector<ModuleVector>& phi);

struct Kernel {
  FPModule module;
  /// Images of the kernel's generators in the source's free cover.
  std::vector<ModuleVector> embedding;
};

/// Generators (in the source's free cover) of ker(phi), reduced modulo the
/// source relations, zeros dropped.
std::vector<ModuleVector> kernel_generators(const ModuleMap& phi);

Kernel kernel_of_map(const ModuleMap& phi);

/// span(ker_gens) / (span(img_gens) + relations of `ambient`), presented on
/// ker_gens. Throws kImageNotInKernel if an image generator falls outside.
FPModule subquotient(const std::vector<ModuleVector>& ker_gens,
                     const std::vector<ModuleVector>& img_gens, const FPModule& ambient);

/// k-dimension of M, nullopt when infinite.
std::optional<std::size_t> length(const FPModule& m);

/// Krull dimension of the support of M; -1 for the zero module.
int module_dimension(const FPModule& m);

/// M / (gens) M.
FPModule quotient_by_ideal(const FPModule& m, const std::vector<Polynomial>& gens);

/// Finite-length M is supported only at the origin (every variable acts
/// nilpotently). Throws kNotZeroDimensional when the length is infinite.
bool supported_at_origin(const FPModule& m);

struct Saturation {
  /// (0 :_M f^infinity).
  FPModule gamma;
  /// M / gamma; f is a nonzerodivisor on it.
  FPModule quotient;
  /// Generators of gamma inside the free cover of M.
  std::vector<ModuleVector> gamma_embedding;
};

/// Throws kSaturationCap if (0 : f^k) has not stabilised after 64 steps.
Saturation gamma_saturation(const FPModule& m, const Polynomial& f);

}  // namespace mcalc
