#pragma once

#include <cstddef>
#include <vector>

#include "mcalc/module_vector.hpp"

// Buchberger engine on submodules of R^rank under position-over-term. Ideal
// computations run through it as rank-1 modules.
namespace mcalc::engine {

struct Division {
  ModuleVector remainder;
  /// One quotient per basis element (empty unless requested).
  std::vector<Polynomial> quotients;
};

/// Full reduction: no term of the remainder is divisible by a leading term
/// of `basis` in the same position, and f = sum quotients[i]*basis[i] + remainder.
Division divide(const ModuleVector& f, const std::vector<ModuleVector>& basis,
                bool with_quotients);

ModuleVector reduce(const ModuleVector& f, const std::vector<ModuleVector>& basis);

struct Options {
  /// Record each basis element as a combination of the inputs.
  bool track = false;
  /// Rank of the recorded combinations; inputs at index >= track_rank are
  /// recorded as zero, which projects the combinations onto the first
  /// track_rank input coordinates.
  std::size_t track_rank = 0;
};

struct Result {
  /// Reduced, monic, sorted by ascending leading term.
  std::vector<ModuleVector> basis;
  /// Parallel to basis when tracked: basis[i] = sum_k reps[i]_k * gens[k].
  std::vector<ModuleVector> reps;
};

Result groebner(const PolyRingPtr& ring, std::size_t rank, const std::vector<ModuleVector>& gens,
                const Options& options = {});

/// Every S-pair of `basis` reduces to zero.
bool satisfies_s_pair_criterion(const std::vector<ModuleVector>& basis);

/// Generators of {c in R^m : sum c_k gens[k] = 0} read off the S-pair
/// reductions of a tracked Groebner basis, projected onto the first `keep`
/// coordinates (keep == gens.size() gives the full syzygy module).
std::vector<ModuleVector> schreyer_syzygies(const PolyRingPtr& ring, std::size_t rank,
                                            const std::vector<ModuleVector>& gens,
                                            std::size_t keep);

}  // namespace mcalc::engine
