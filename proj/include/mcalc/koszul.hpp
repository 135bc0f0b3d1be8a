#pragma once

#include <cstddef>
#include <vector>

#include "mcalc/fpmodule.hpp"

namespace mcalc {

/// K(x, M): C_i = M^{C(n,i)} with basis e_S for increasing subsets S of
/// {0..n-1} (lexicographic), generator j of block S at position
/// block(S) * g + j, and d(e_S (x) m) = sum_{t in S} (-1)^{pos(t,S)} x_t e_{S-t} (x) m.
class KoszulComplex {
 public:
  /// Checks d o d = 0. An empty sequence gives the complex M in degree 0.
  KoszulComplex(std::vector<Polynomial> sequence, FPModule base);

  const std::vector<Polynomial>& sequence() const { return sequence_; }
  const FPModule& base() const { return base_; }
  std::size_t size() const { return sequence_.size(); }

  const std::vector<std::vector<std::size_t>>& subsets(std::size_t i) const { return subsets_[i]; }
  FPModule term(std::size_t i) const;
  /// d_i : C_i -> C_{i-1} for 1 <= i <= n.
  ModuleMap differential(std::size_t i) const;
  /// Columns of d_i in the free cover of C_{i-1}.
  std::vector<ModuleVector> columns(std::size_t i) const;

 private:
  std::vector<Polynomial> sequence_;
  FPModule base_;
  std::vector<std::vector<std::vector<std::size_t>>> subsets_;
};

/// H_i(x, M) = ker d_i / im d_{i+1}, returned with a pruned presentation.
FPModule koszul_homology(const std::vector<Polynomial>& x, const FPModule& m, std::size_t i);

/// H_0 .. H_n.
std::vector<FPModule> koszul_homologies(const std::vector<Polynomial>& x, const FPModule& m);

/// Lengths of H_0 .. H_n; throws kInfiniteHomology if one is infinite.
std::vector<long long> koszul_lengths(const std::vector<Polynomial>& x, const FPModule& m);

/// sum (-1)^i l(H_i(x, M)).
long long alternating_length(const std::vector<long long>& lengths);

struct VirtualTerm {
  long long coefficient;
  FPModule module;
};

/// Formal integer combination of modules over one ring. Only functionals
/// (length, multiplicity) compare classes.
class VirtualModule {
 public:
  explicit VirtualModule(RingSpec ring) : ring_(std::move(ring)) {}
  static VirtualModule of(const FPModule& m);

  const RingSpec& ring() const { return ring_; }
  const std::vector<VirtualTerm>& terms() const { return terms_; }

  /// Zero coefficients and zero modules are dropped.
  void add(long long coefficient, const FPModule& m);

 private:
  RingSpec ring_;
  std::vector<VirtualTerm> terms_;
};

/// [M] -> sum (-1)^i [H_i(x, M)], extended linearly; the empty sequence is
/// the identity.
VirtualModule phi_apply(const std::vector<Polynomial>& x, const VirtualModule& v);

/// sum c * l(M); throws kInfiniteHomology when a term has infinite length.
long long length_evaluation(const VirtualModule& v);

/// Module N with dim N = dim M - m and [N] = Phi_x([M]): saturate away
/// the x_j-torsion, cut by x_j, repeat. Throws kDimensionDropViolated unless
/// dim M/(x_1..x_j)M = dim M - j for every prefix.
FPModule reduce_class(const std::vector<Polynomial>& x, const FPModule& m);

}  // namespace mcalc
