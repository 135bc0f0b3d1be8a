#include "mcalc/koszul.hpp"

#include <algorithm>

#include "mcalc/error.hpp"

namespace mcalc {

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t index_of(const std::vector<std::vector<std::size_t>>& list, const std::vector<std::size_t>& s) {
  return static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), s) - list.begin());
}

}  // namespace

KoszulComplex::KoszulComplex(std::vector<Polynomial> sequence, FPModule base)
    : sequence_(std::move(sequence)), base_(std::move(base)) {
  for (const auto& f : sequence_) require_same_ring(base_.base(), f.ring());
  const std::size_t n = sequence_.size();
  for (std::size_t i = 0; i <= n; ++i) subsets_.push_back(subsets_of_size(n, i));
  for (std::size_t i = 2; i <= n; ++i) {
    const auto outer = columns(i);
    const auto inner = columns(i - 1);
    const FPModule target = term(i - 2);
    const std::size_t rank = target.rank();
    for (const auto& c : outer)
      if (!target.is_relation(combine(base_.base(), rank, c.components(), inner)))
        throw Error(ErrorCode::kInvalidArgument, "internal: Koszul differentials do not compose to zero");
  }
}

FPModule KoszulComplex::term(std::size_t i) const {
  const std::size_t blocks = subsets_[i].size();
  const std::size_t g = base_.rank();
  std::vector<ModuleVector> rels;
  rels.reserve(blocks * base_.relations().size());
  for (std::size_t b = 0; b < blocks; ++b)
    for (const auto& r : base_.relations()) rels.push_back(r.shifted(b * g, blocks * g));
  return FPModule(base_.ring(), blocks * g, rels);
}

std::vector<ModuleVector> KoszulComplex::columns(std::size_t i) const {
  const std::size_t g = base_.rank();
  const auto& src = subsets_[i];
  const auto& dst = subsets_[i - 1];
  const std::size_t rank = dst.size() * g;
  std::vector<ModuleVector> out;
  out.reserve(src.size() * g);
  for (const auto& s : src) {
    for (std::size_t j = 0; j < g; ++j) {
      ModuleVector col(base_.base(), rank);
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        std::vector<std::size_t> rest = s;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
        const Polynomial coeff = pos % 2 ? -sequence_[s[pos]] : sequence_[s[pos]];
        col += ModuleVector::embed(coeff, rank, index_of(dst, rest) * g + j);
      }
      out.push_back(std::move(col));
    }
  }
  return out;
}

ModuleMap KoszulComplex::differential(std::size_t i) const {
  return ModuleMap(term(i), term(i - 1), columns(i));
}

FPModule koszul_homology(const std::vector<Polynomial>& x, const FPModule& m, std::size_t i) {
  const std::size_t n = x.size();
  if (i > n) return FPModule::zero(m.ring());
  const KoszulComplex k(x, m);
  const FPModule ci = k.term(i);
  std::vector<ModuleVector> ker;
  if (i == 0) {
    for (std::size_t j = 0; j < ci.rank(); ++j) ker.push_back(ModuleVector::unit(ci.base(), ci.rank(), j));
  } else {
    ker = kernel_generators(k.differential(i));
  }
  std::vector<ModuleVector> img;
  if (i < n) img = k.columns(i + 1);
  return subquotient(ker, img, ci).pruned();
}

std::vector<FPModule> koszul_homologies(const std::vector<Polynomial>& x, const FPModule& m) {
  std::vector<FPModule> out;
  for (std::size_t i = 0; i <= x.size(); ++i) out.push_back(koszul_homology(x, m, i));
  return out;
}

std::vector<long long> koszul_lengths(const std::vector<Polynomial>& x, const FPModule& m) {
  std::vector<long long> out;
  for (std::size_t i = 0; i <= x.size(); ++i) {
    const auto l = length(koszul_homology(x, m, i));
    if (!l) throw Error(ErrorCode::kInfiniteHomology, "H_" + std::to_string(i) + " has infinite length");
    out.push_back(static_cast<long long>(*l));
  }
  return out;
}

long long alternating_length(const std::vector<long long>& lengths) {
  long long s = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) s += i % 2 ? -lengths[i] : lengths[i];
  return s;
}

VirtualModule VirtualModule::of(const FPModule& m) {
  VirtualModule v(m.ring());
  v.add(1, m);
  return v;
}

void VirtualModule::add(long long coefficient, const FPModule& m) {
  if (!(m.ring() == ring_)) throw Error(ErrorCode::kRingMismatch, "virtual module terms over different rings");
  if (coefficient == 0 || m.is_zero()) return;
  terms_.push_back(VirtualTerm{coefficient, m});
}

VirtualModule phi_apply(const std::vector<Polynomial>& x, const VirtualModule& v) {
  VirtualModule out(v.ring());
  for (const auto& t : v.terms()) {
    const auto hs = koszul_homologies(x, t.module);
    for (std::size_t i = 0; i < hs.size(); ++i) out.add(i % 2 ? -t.coefficient : t.coefficient, hs[i]);
  }
  return out;
}

long long length_evaluation(const VirtualModule& v) {
  long long s = 0;
  for (const auto& t : v.terms()) {
    const auto l = length(t.module);
    if (!l) throw Error(ErrorCode::kInfiniteHomology, "class has a term of infinite length");
    s += t.coefficient * static_cast<long long>(*l);
  }
  return s;
}

FPModule reduce_class(const std::vector<Polynomial>& x, const FPModule& m) {
  const int d = module_dimension(m);
  std::vector<Polynomial> prefix;
  for (std::size_t j = 0; j < x.size(); ++j) {
    prefix.push_back(x[j]);
    const int dj = module_dimension(quotient_by_ideal(m, prefix));
    if (dj != d - static_cast<int>(j) - 1)
      throw Error(ErrorCode::kDimensionDropViolated,
                  "dim M/(x_1..x_" + std::to_string(j + 1) + ")M = " + std::to_string(dj) + ", expected " +
                      std::to_string(d - static_cast<int>(j) - 1));
  }
  FPModule n = m;
  for (const auto& f : x) {
    const auto sat = gamma_saturation(n, f);
    n = quotient_by_ideal(sat.quotient, {f}).pruned();
  }
  return n;
}

}  // namespace mcalc
