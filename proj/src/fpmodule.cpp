#include "mcalc/fpmodule.hpp"

#include <algorithm>

#include "mcalc/error.hpp"
#include "mcalc/gb_engine.hpp"
#include "mcalc/groebner.hpp"

namespace mcalc {

namespace {

constexpr int kSaturationLimit = 64;

std::vector<std::vector<Monomial>> leads_by_position(const std::vector<ModuleVector>& gb,
                                                     std::size_t rank) {
  std::vector<std::vector<Monomial>> out(rank);
  for (const auto& v : gb) out[v.leading_term().position].push_back(v.leading_term().mono);
  return out;
}

}  // namespace

std::vector<ModuleVector> module_gb_over_ambient(const PolyRingPtr& ring,
                                                 const std::vector<ModuleVector>& vectors,
                                                 std::size_t rank) {
  return engine::groebner(ring, rank, vectors).basis;
}

std::vector<ModuleVector> module_gb(const RingSpec& ring, const std::vector<ModuleVector>& vectors,
                                    std::size_t rank) {
  std::vector<ModuleVector> all = vectors;
  for (std::size_t i = 0; i < rank; ++i)
    for (const auto& f : ring.quotient()) all.push_back(ModuleVector::embed(f, rank, i));
  return module_gb_over_ambient(ring.base(), all, rank);
}

FPModule::FPModule(RingSpec ring, std::size_t rank, const std::vector<ModuleVector>& relations)
    : ring_(std::move(ring)), rank_(rank) {
  for (const auto& v : relations) {
    require_same_ring(ring_.base(), v.ring());
    if (v.rank() != rank_) throw Error(ErrorCode::kInvalidArgument, "relation of wrong rank");
  }
  relations_ = module_gb(ring_, relations, rank_);
}

FPModule FPModule::free(const RingSpec& ring, std::size_t rank) { return FPModule(ring, rank, {}); }

FPModule FPModule::cyclic(const RingSpec& ring, const std::vector<Polynomial>& gens) {
  std::vector<ModuleVector> rels;
  for (const auto& f : gens) rels.push_back(ModuleVector::embed(f, 1, 0));
  return FPModule(ring, 1, rels);
}

bool FPModule::is_zero() const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (!is_relation(ModuleVector::unit(base(), rank_, i))) return false;
  return true;
}

bool FPModule::is_relation(const ModuleVector& v) const { return reduce(v).is_zero(); }

ModuleVector FPModule::reduce(const ModuleVector& v) const {
  return engine::reduce(v, relations_);
}

bool FPModule::annihilated_by(const Polynomial& f) const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (!is_relation(ModuleVector::embed(f, rank_, i))) return false;
  return true;
}

FPModule FPModule::pruned() const {
  std::vector<bool> pivot(rank_, false);
  for (const auto& r : relations_)
    if (r.leading_term().mono.is_one()) pivot[r.leading_term().position] = true;
  if (std::none_of(pivot.begin(), pivot.end(), [](bool b) { return b; })) return *this;
  std::vector<std::uint32_t> new_index(rank_, 0);
  std::size_t new_rank = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    if (!pivot[i]) new_index[i] = static_cast<std::uint32_t>(new_rank++);
  std::vector<ModuleVector> rels;
  for (const auto& r : relations_) {
    if (pivot[r.leading_term().position]) continue;
    std::vector<VectorTerm> terms;
    for (const auto& t : r.terms()) {
      // A reduced basis has no other term at a pivot position.
      if (pivot[t.position]) throw Error(ErrorCode::kInvalidArgument, "internal: unreduced relations");
      terms.push_back(VectorTerm{new_index[t.position], t.mono, t.coeff});
    }
    rels.push_back(ModuleVector::from_terms(base(), new_rank, std::move(terms)));
  }
  return FPModule(ring_, new_rank, rels);
}

bool operator==(const FPModule& a, const FPModule& b) {
  return a.ring_ == b.ring_ && a.rank_ == b.rank_ && a.relations_ == b.relations_;
}

ModuleMap::ModuleMap(FPModule source, FPModule target, std::vector<ModuleVector> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (columns_.size() != source_.rank())
    throw Error(ErrorCode::kInvalidArgument, "one column per source generator is required");
  for (const auto& c : columns_)
    if (c.rank() != target_.rank()) throw Error(ErrorCode::kInvalidArgument, "column of wrong rank");
  for (const auto& r : source_.relations())
    if (!target_.is_relation(apply(r)))
      throw Error(ErrorCode::kInvalidArgument, "map is not well defined on relation " + r.to_string());
}

ModuleVector ModuleMap::apply(const ModuleVector& v) const {
  return combine(target_.base(), target_.rank(), v.components(), columns_);
}

std::vector<ModuleVector> syzygies(const std::vector<ModuleVector>& vectors) {
  if (vectors.empty()) return {};
  const PolyRingPtr& ring = vectors.front().ring();
  const std::size_t rank = vectors.front().rank();
  auto out = engine::schreyer_syzygies(ring, rank, vectors, vectors.size());
  for (const auto& c : out)
    if (!combine(ring, rank, c.components(), vectors).is_zero())
      throw Error(ErrorCode::kInvalidArgument, "internal: syzygy check failed");
  return out;
}

std::vector<ModuleVector> preimage_submodule(const PolyRingPtr& ring, std::size_t a, std::size_t b,
                                             const std::vector<ModuleVector>& K,
                                             const std::vector<ModuleVector>& L,
                                             const std::vector<ModuleVector>& phi) {
  if (phi.size() != a) throw Error(ErrorCode::kInvalidArgument, "phi needs one column per source generator");
  std::vector<ModuleVector> family;
  family.reserve(K.size() + L.size());
  for (const auto& k : K) family.push_back(combine(ring, b, k.components(), phi));
  family.insert(family.end(), L.begin(), L.end());
  const auto syz = engine::schreyer_syzygies(ring, b, family, K.size());
  std::vector<ModuleVector> gens;
  gens.reserve(syz.size());
  for (const auto& c : syz) gens.push_back(combine(ring, a, c.components(), K));
  return module_gb_over_ambient(ring, gens, a);
}

std::vector<ModuleVector> preimage_submodule(const PolyRingPtr& ring, std::size_t a, std::size_t b,
                                             const std::vector<ModuleVector>& L,
                                             const std::vector<ModuleVector>& phi) {
  if (phi.size() != a) throw Error(ErrorCode::kInvalidArgument, "phi needs one column per source generator");
  std::vector<ModuleVector> family = phi;
  family.insert(family.end(), L.begin(), L.end());
  const auto syz = engine::schreyer_syzygies(ring, b, family, a);
  return module_gb_over_ambient(ring, syz, a);
}

std::vector<ModuleVector> kernel_generators(const ModuleMap& phi) {
  const auto& src = phi.source();
  const auto pre = preimage_submodule(src.base(), src.rank(), phi.target().rank(),
                                      phi.target().relations(), phi.columns());
  std::vector<ModuleVector> out;
  for (const auto& v : pre) {
    ModuleVector r = src.reduce(v);
    if (r.is_zero()) continue;
    r = r.monic();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

Kernel kernel_of_map(const ModuleMap& phi) {
  auto gens = kernel_generators(phi);
  const auto& src = phi.source();
  auto rels = preimage_submodule(src.base(), gens.size(), src.rank(), src.relations(), gens);
  return Kernel{FPModule(src.ring(), gens.size(), rels), std::move(gens)};
}

FPModule subquotient(const std::vector<ModuleVector>& ker_gens,
                     const std::vector<ModuleVector>& img_gens, const FPModule& ambient) {
  const auto& ring = ambient.base();
  const std::size_t g = ambient.rank();
  std::vector<ModuleVector> span = ker_gens;
  span.insert(span.end(), ambient.relations().begin(), ambient.relations().end());
  const auto span_gb = module_gb_over_ambient(ring, span, g);
  for (const auto& v : img_gens)
    if (!engine::reduce(v, span_gb).is_zero())
      throw Error(ErrorCode::kImageNotInKernel, "image generator " + v.to_string() + " is outside the kernel");
  std::vector<ModuleVector> L = img_gens;
  L.insert(L.end(), ambient.relations().begin(), ambient.relations().end());
  const auto rels = preimage_submodule(ring, ker_gens.size(), g, L, ker_gens);
  return FPModule(ambient.ring(), ker_gens.size(), rels);
}

std::optional<std::size_t> length(const FPModule& m) {
  const auto leads = leads_by_position(m.relations(), m.rank());
  std::size_t total = 0;
  for (const auto& l : leads) {
    const auto c = monomial_ideal::count_standard_monomials(l, m.ring().nvars());
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

int module_dimension(const FPModule& m) {
  const auto leads = leads_by_position(m.relations(), m.rank());
  int best = -1;
  for (const auto& l : leads) best = std::max(best, monomial_ideal::dimension(l, m.ring().nvars()));
  return best;
}

FPModule quotient_by_ideal(const FPModule& m, const std::vector<Polynomial>& gens) {
  std::vector<ModuleVector> rels = m.relations();
  for (const auto& f : gens)
    for (std::size_t j = 0; j < m.rank(); ++j) rels.push_back(ModuleVector::embed(f, m.rank(), j));
  return FPModule(m.ring(), m.rank(), rels);
}

bool supported_at_origin(const FPModule& m) {
  const auto len = length(m);
  if (!len) throw Error(ErrorCode::kNotZeroDimensional, "module has infinite length");
  const auto exponent = static_cast<std::uint32_t>(*len);
  const Scalar one = Scalar::one(m.ring().field());
  for (std::size_t v = 0; v < m.ring().nvars(); ++v)
    if (!m.annihilated_by(Polynomial::monomial(m.base(), Monomial::variable(v, exponent), one)))
      return false;
  return true;
}

Saturation gamma_saturation(const FPModule& m, const Polynomial& f) {
  const auto& ring = m.base();
  require_same_ring(ring, f.ring());
  const std::size_t g = m.rank();
  std::vector<ModuleVector> times_f;
  times_f.reserve(g);
  for (std::size_t j = 0; j < g; ++j) times_f.push_back(ModuleVector::embed(f, g, j));

  // K_k = {v : f^k v in N}; K_{k+1} is the preimage of K_k under f.
  std::vector<ModuleVector> current = m.relations();
  bool stable = false;
  for (int step = 0; step < kSaturationLimit; ++step) {
    auto next = preimage_submodule(ring, g, g, current, times_f);
    if (next == current) {
      stable = true;
      break;
    }
    current = std::move(next);
  }
  if (!stable)
    throw Error(ErrorCode::kSaturationCap,
                "(0 : f^k) did not stabilise within " + std::to_string(kSaturationLimit) + " steps");

  FPModule quotient(m.ring(), g, current);
  if (!kernel_generators(ModuleMap(quotient, quotient, times_f)).empty())
    throw Error(ErrorCode::kInvalidArgument, "internal: f is a zerodivisor on the saturated quotient");

  std::vector<ModuleVector> gamma_gens;
  for (const auto& v : current) {
    ModuleVector r = m.reduce(v);
    if (!r.is_zero()) gamma_gens.push_back(r.monic());
  }
  FPModule gamma = subquotient(gamma_gens, {}, m);
  return Saturation{std::move(gamma), std::move(quotient), std::move(gamma_gens)};
}

}  // namespace mcalc
