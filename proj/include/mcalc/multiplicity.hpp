#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcalc/koszul.hpp"
#include "mcalc/report.hpp"

namespace mcalc {

inline constexpr std::size_t kMaxLengthSequence = 40;

struct LengthSequence {
  std::vector<Polynomial> ideal;
  /// l(M / I^n M) for n = 1..N.
  std::vector<long long> values;
};

/// Throws kNotFiniteColength when l(M/IM) is infinite and
/// kSupportNotAtOrigin when M/IM lives away from the origin.
LengthSequence hilbert_samuel_lengths(const FPModule& m, const std::vector<Polynomial>& ideal,
                                      std::size_t count);

struct Multiplicity {
  long long value;
  int r;
  /// l(M / I^n M), n = 1..N.
  std::vector<long long> lengths;
  /// r-th backward differences D_n, n = r..N (with l(M/I^0 M) = 0).
  std::vector<long long> differences;
  std::vector<std::string> warnings;

  nlohmann::json to_json() const;
};

/// e_I(M, r): the r-th difference of n -> l(M/I^n M) once three consecutive
/// values agree; kNoStabilization if that has not happened by n = 40.
Multiplicity multiplicity_details(const FPModule& m, const std::vector<Polynomial>& ideal, int r);

long long multiplicity(const FPModule& m, const std::vector<Polynomial>& ideal, int r);

/// sum (-1)^p l(H_p(x, M)); kInfiniteHomology if a length is infinite.
long long serre_alternating_sum(const std::vector<Polynomial>& x, const FPModule& m);

/// Local-model caveats for the ring (non-homogeneous quotient).
std::vector<std::string> ring_warnings(const RingSpec& ring);

/// e_(x)(M, |x|) against the Koszul alternating sum.
Report verify_serre(const FPModule& m, const std::vector<Polynomial>& x);

/// Alternating sum over the concatenation x y against
/// sum (-1)^{p+q} l(H_p(x, H_q(y, M))).
Report verify_factorization(const FPModule& m, const std::vector<Polynomial>& x,
                            const std::vector<Polynomial>& y);

/// With x[i]^k M = 0 (kHypothesisFails otherwise; i is 0-based), the Koszul
/// alternating sum is 0.
Report verify_vanish(const FPModule& m, const std::vector<Polynomial>& x, std::size_t i, unsigned k);

/// Three evaluations of [M]: e_{x x2}(M, r+s), l(Phi_x2 Phi_x [M]) and
/// e_{x2}(Phi_x [M], s). Left/right compare routes (1,2) with (2,3).
Report verify_serre2(const FPModule& m, const std::vector<Polynomial>& x,
                     const std::vector<Polynomial>& x2);

/// l(B/fgB) = l(B/fB) + l(B/gB) on a one-dimensional B. Throws
/// kNotDimensionOne, or kNotParameter when f or g fails to cut B down to a
/// finite-length quotient supported at the origin.
Report ord_check(const RingSpec& b, const Polynomial& f, const Polynomial& g);

struct SearchRow {
  std::vector<Polynomial> ideal;
  /// Empty when the candidate is accepted.
  std::string rejected;
  long long e = 0;
};

struct SearchResult {
  bool found = false;
  std::vector<Polynomial> ideal;
  long long e = 0;
  int dimension = 0;
  std::vector<SearchRow> table;

  nlohmann::json to_json() const;
};

/// Deterministic search for a parameter ideal I of A with gcd(e_I(A), p) = 1.
/// Candidates: variables, then normalised linear forms with coefficients in
/// {0..min(char-1, 4)}, taken d at a time; then seeded random linear forms
/// with degree-2 perturbations. Stops after `budget` candidates.
SearchResult search_parameters(const RingSpec& a, std::uint64_t p, std::size_t budget, std::uint64_t seed);

/// Parameter validation used by the search: each prefix drops the
/// dimension by one and A/(f) is finite and supported at the origin. Returns
/// an empty string when valid, otherwise the reason.
std::string parameter_defect(const RingSpec& a, const std::vector<Polynomial>& f);

}  // namespace mcalc
