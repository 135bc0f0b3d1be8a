#include "mcalc/gb_engine.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "mcalc/error.hpp"

namespace mcalc::engine {

namespace {

// Indices of basis elements grouped by the position of their leading term.
std::vector<std::vector<std::size_t>> index_by_position(const std::vector<ModuleVector>& basis,
                                                        std::size_t rank) {
  std::vector<std::vector<std::size_t>> out(rank);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero()) out[basis[i].leading_term().position].push_back(i);
  return out;
}

const ModuleVector* find_reducer(const VectorTerm& t, const std::vector<ModuleVector>& basis,
                                 const std::vector<std::vector<std::size_t>>& by_position,
                                 std::size_t* which) {
  for (std::size_t k : by_position[t.position]) {
    if (basis[k].leading_term().mono.divides(t.mono)) {
      *which = k;
      return &basis[k];
    }
  }
  return nullptr;
}

// Full reduction of `h` (with a parallel combination `rep`) by `basis`/`reps`.
void reduce_tracked(ModuleVector& h, ModuleVector* rep, const std::vector<ModuleVector>& basis,
                    const std::vector<ModuleVector>* reps,
                    const std::vector<std::vector<std::size_t>>& by_position,
                    std::size_t skip = static_cast<std::size_t>(-1)) {
  ModuleVector rem(h.ring(), h.rank());
  while (!h.is_zero()) {
    const VectorTerm& lt = h.leading_term();
    const ModuleVector* g = nullptr;
    std::size_t k = 0;
    for (std::size_t idx : by_position[lt.position]) {
      if (idx == skip) continue;
      if (basis[idx].leading_term().mono.divides(lt.mono)) {
        g = &basis[idx];
        k = idx;
        break;
      }
    }
    if (g == nullptr) {
      rem.push_trailing(h.pop_leading());
      continue;
    }
    const Monomial m = lt.mono / g->leading_term().mono;
    const Scalar c = lt.coeff / g->leading_term().coeff;
    if (rep != nullptr) rep->subtract_multiple((*reps)[k], m, c);
    h.subtract_multiple(*g, m, c);
  }
  h = std::move(rem);
}

struct Item {
  std::uint32_t degree;
  std::uint32_t position;
  Monomial lcm;
  std::size_t i;
  std::size_t j;  // kInput marks an input generator i
};

constexpr std::size_t kInput = static_cast<std::size_t>(-1);

struct ItemLess {
  const MonomialOrder* order;
  bool operator()(const Item& a, const Item& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (auto c = compare_pot(*order, a.position, a.lcm, b.position, b.lcm); c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::pair<std::size_t, std::size_t> ordered(std::size_t a, std::size_t b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

ModuleVector s_vector(const ModuleVector& a, const ModuleVector& b, const Monomial& lcm) {
  const auto& la = a.leading_term();
  const auto& lb = b.leading_term();
  ModuleVector s = a.times_term(lcm / la.mono, la.coeff.inverse());
  s.subtract_multiple(b, lcm / lb.mono, lb.coeff.inverse());
  return s;
}

}  // namespace

Division divide(const ModuleVector& f, const std::vector<ModuleVector>& basis,
                bool with_quotients) {
  const std::size_t rank = f.rank();
  for (const auto& g : basis)
    if (g.rank() != rank) throw Error(ErrorCode::kInvalidArgument, "rank mismatch in division");
  const auto by_position = index_by_position(basis, rank);
  ModuleVector h = f;
  ModuleVector rem(f.ring(), rank);
  std::vector<std::vector<Term>> quotient_terms(with_quotients ? basis.size() : 0);
  while (!h.is_zero()) {
    const VectorTerm& lt = h.leading_term();
    std::size_t k = 0;
    const ModuleVector* g = find_reducer(lt, basis, by_position, &k);
    if (g == nullptr) {
      rem.push_trailing(h.pop_leading());
      continue;
    }
    const Monomial m = lt.mono / g->leading_term().mono;
    const Scalar c = lt.coeff / g->leading_term().coeff;
    if (with_quotients) quotient_terms[k].push_back(Term{m, c});
    h.subtract_multiple(*g, m, c);
  }
  Division out{std::move(rem), {}};
  if (with_quotients) {
    out.quotients.reserve(basis.size());
    for (auto& terms : quotient_terms)
      out.quotients.push_back(Polynomial::from_terms(f.ring(), std::move(terms)));
  }
  return out;
}

ModuleVector reduce(const ModuleVector& f, const std::vector<ModuleVector>& basis) {
  ModuleVector h = f;
  reduce_tracked(h, nullptr, basis, nullptr, index_by_position(basis, f.rank()));
  return h;
}

Result groebner(const PolyRingPtr& ring, std::size_t rank, const std::vector<ModuleVector>& gens,
                const Options& options) {
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.rank() != rank) throw Error(ErrorCode::kInvalidArgument, "generator of wrong rank");
  }
  const MonomialOrder& order = ring->order();
  const bool track = options.track;

  std::vector<ModuleVector> basis;
  std::vector<ModuleVector> reps;
  std::vector<std::vector<std::size_t>> by_position(rank);
  std::set<Item, ItemLess> queue(ItemLess{&order});
  std::set<std::pair<std::size_t, std::size_t>> pending;

  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].is_zero()) continue;
    const auto& lt = gens[k].leading_term();
    queue.insert(Item{lt.mono.degree(), lt.position, lt.mono, k, kInput});
  }

  while (!queue.empty()) {
    const Item item = *queue.begin();
    queue.erase(queue.begin());

    ModuleVector h(ring, rank);
    ModuleVector rep(ring, options.track_rank);
    if (item.j == kInput) {
      h = gens[item.i];
      if (track && item.i < options.track_rank)
        rep = ModuleVector::unit(ring, options.track_rank, item.i);
    } else {
      pending.erase({item.i, item.j});
      const auto& gi = basis[item.i];
      const auto& gj = basis[item.j];
      // Product criterion holds for ideals only.
      if (rank == 1 && gi.leading_term().mono.coprime(gj.leading_term().mono)) continue;
      bool chain = false;
      for (std::size_t k : by_position[item.position]) {
        if (k == item.i || k == item.j) continue;
        if (!basis[k].leading_term().mono.divides(item.lcm)) continue;
        if (pending.count(ordered(item.i, k)) || pending.count(ordered(item.j, k))) continue;
        chain = true;
        break;
      }
      if (chain) continue;
      h = s_vector(gi, gj, item.lcm);
      if (track) {
        // Basis elements are monic.
        rep = reps[item.i].times_term(item.lcm / gi.leading_term().mono, Scalar::one(ring->field()));
        rep.subtract_multiple(reps[item.j], item.lcm / gj.leading_term().mono,
                              Scalar::one(ring->field()));
      }
    }

    reduce_tracked(h, track ? &rep : nullptr, basis, &reps, by_position);
    if (h.is_zero()) continue;

    const Scalar inv = h.leading_term().coeff.inverse();
    h = h.scaled(inv);
    if (track) rep = rep.scaled(inv);

    const std::size_t n = basis.size();
    const auto pos = h.leading_term().position;
    const Monomial lm = h.leading_term().mono;
    for (std::size_t k : by_position[pos]) {
      const Monomial l = Monomial::lcm(basis[k].leading_term().mono, lm);
      queue.insert(Item{l.degree(), pos, l, k, n});
      pending.insert({k, n});
    }
    basis.push_back(std::move(h));
    if (track) reps.push_back(std::move(rep));
    by_position[pos].push_back(n);
  }

  // Minimalize: drop elements whose leading term is a multiple of another's.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& li = basis[i].leading_term();
    bool redundant = false;
    for (std::size_t j : by_position[li.position]) {
      if (j == i) continue;
      const auto& lj = basis[j].leading_term();
      if (lj.mono.divides(li.mono) && (!(lj.mono == li.mono) || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<ModuleVector> minimal;
  std::vector<ModuleVector> minimal_reps;
  for (std::size_t i : keep) {
    minimal.push_back(basis[i]);
    if (track) minimal_reps.push_back(reps[i]);
  }

  // Interreduce tails.
  const auto min_by_position = index_by_position(minimal, rank);
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    ModuleVector h = minimal[i];
    ModuleVector rep = track ? minimal_reps[i] : ModuleVector(ring, 0);
    reduce_tracked(h, track ? &rep : nullptr, minimal, &minimal_reps, min_by_position, i);
    minimal[i] = std::move(h);
    if (track) minimal_reps[i] = std::move(rep);
  }

  std::vector<std::size_t> perm(minimal.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& ta = minimal[a].leading_term();
    const auto& tb = minimal[b].leading_term();
    return compare_pot(order, ta.position, ta.mono, tb.position, tb.mono) < 0;
  });
  Result result;
  for (std::size_t i : perm) {
    result.basis.push_back(std::move(minimal[i]));
    if (track) result.reps.push_back(std::move(minimal_reps[i]));
  }
  return result;
}

bool satisfies_s_pair_criterion(const std::vector<ModuleVector>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& li = basis[i].leading_term();
      const auto& lj = basis[j].leading_term();
      if (li.position != lj.position) continue;
      const ModuleVector s = s_vector(basis[i], basis[j], Monomial::lcm(li.mono, lj.mono));
      if (!reduce(s, basis).is_zero()) return false;
    }
  }
  return true;
}

std::vector<ModuleVector> schreyer_syzygies(const PolyRingPtr& ring, std::size_t rank,
                                            const std::vector<ModuleVector>& gens,
                                            std::size_t keep) {
  if (keep > gens.size()) throw Error(ErrorCode::kInvalidArgument, "projection exceeds input count");
  const Result gb = groebner(ring, rank, gens, Options{true, keep});
  const auto& basis = gb.basis;
  const auto& reps = gb.reps;
  const Scalar one = Scalar::one(ring->field());

  std::vector<ModuleVector> out;
  const auto push = [&](ModuleVector v) {
    if (v.is_zero()) return;
    v = v.monic();
    for (const auto& w : out)
      if (w == v) return;
    out.push_back(std::move(v));
  };

  // Each S-pair reduction of the basis yields a relation among basis
  // elements; pulling it back through reps gives one on the inputs.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& li = basis[i].leading_term();
      const auto& lj = basis[j].leading_term();
      if (li.position != lj.position) continue;
      const Monomial l = Monomial::lcm(li.mono, lj.mono);
      const Monomial mi = l / li.mono;
      const Monomial mj = l / lj.mono;
      ModuleVector s = basis[i].times_term(mi, one);
      s.subtract_multiple(basis[j], mj, one);
      const Division d = divide(s, basis, true);
      if (!d.remainder.is_zero())
        throw Error(ErrorCode::kInvalidArgument, "internal: tracked basis is not a Groebner basis");
      ModuleVector syz = reps[i].times_term(mi, one);
      syz.subtract_multiple(reps[j], mj, one);
      for (std::size_t l2 = 0; l2 < basis.size(); ++l2)
        if (!d.quotients[l2].is_zero()) syz -= reps[l2].times(d.quotients[l2]);
      push(std::move(syz));
    }
  }
  // Each input expressed through the basis.
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Division d = divide(gens[k], basis, true);
    if (!d.remainder.is_zero())
      throw Error(ErrorCode::kInvalidArgument, "internal: input outside its own span");
    ModuleVector syz = k < keep ? ModuleVector::unit(ring, keep, k) : ModuleVector(ring, keep);
    for (std::size_t l2 = 0; l2 < basis.size(); ++l2)
      if (!d.quotients[l2].is_zero()) syz -= reps[l2].times(d.quotients[l2]);
    push(std::move(syz));
  }
  return out;
}

}  // namespace mcalc::engine
