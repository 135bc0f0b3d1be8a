#include "mcalc/groebner.hpp"

#include <algorithm>
#include <functional>

#include "mcalc/error.hpp"
#include "mcalc/gb_engine.hpp"

namespace mcalc {

namespace {

std::vector<ModuleVector> as_vectors(const std::vector<Polynomial>& polys) {
  std::vector<ModuleVector> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(ModuleVector::embed(f, 1, 0));
  return out;
}

// Enumerates standard monomials by depth-first search over exponent vectors;
// a partial assignment that is already in the ideal prunes every extension.
template <typename Visit>
bool enumerate_standard(const std::vector<Monomial>& leads, std::size_t nvars, Visit&& visit) {
  for (const auto& m : leads)
    if (m.is_one()) return true;
  std::vector<std::uint32_t> bound(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    for (const auto& m : leads) {
      std::size_t idx = 0;
      if (m.support_size(&idx) == 1 && idx == v)
        bound[v] = bound[v] == 0 ? m.exponent(v) : std::min(bound[v], m.exponent(v));
    }
    if (bound[v] == 0) return false;
  }
  const auto in_ideal = [&](const Monomial& m) {
    return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::vector<std::uint32_t> exps(nvars, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == nvars) {
      visit(Monomial::from_exponents(exps));
      return;
    }
    for (std::uint32_t e = 0; e < bound[v]; ++e) {
      exps[v] = e;
      if (in_ideal(Monomial::from_exponents(exps))) break;
      walk(v + 1);
    }
    exps[v] = 0;
  };
  walk(0);
  return true;
}

}  // namespace

namespace monomial_ideal {

std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leads,
                                                        std::size_t nvars) {
  std::vector<Monomial> out;
  if (!enumerate_standard(leads, nvars, [&](const Monomial& m) { out.push_back(m); }))
    return std::nullopt;
  return out;
}

std::optional<std::size_t> count_standard_monomials(const std::vector<Monomial>& leads,
                                                    std::size_t nvars) {
  std::size_t count = 0;
  if (!enumerate_standard(leads, nvars, [&](const Monomial&) { ++count; })) return std::nullopt;
  return count;
}

int dimension(const std::vector<Monomial>& leads, std::size_t nvars) {
  for (const auto& m : leads)
    if (m.is_one()) return -1;
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (std::size_t v = 0; v < nvars && inside; ++v)
        if (m.exponent(v) > 0 && !(mask & (1u << v))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace monomial_ideal

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.leading_monomial());
  return out;
}

bool GroebnerBasis::is_unit() const {
  return generators_.size() == 1 && generators_.front().leading_monomial().is_one();
}

GroebnerBasis buchberger(const RingSpec& ring, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> all = gens;
  for (const auto& f : all) require_same_ring(ring.base(), f.ring());
  all.insert(all.end(), ring.quotient().begin(), ring.quotient().end());
  const auto result = engine::groebner(ring.base(), 1, as_vectors(all));
  std::vector<Polynomial> basis;
  basis.reserve(result.basis.size());
  for (const auto& v : result.basis) basis.push_back(v.component(0));
  return GroebnerBasis(ring, std::move(basis));
}

NormalForm normal_form(const Polynomial& f, const GroebnerBasis& gb, bool with_witness) {
  require_same_ring(gb.ring().base(), f.ring());
  const auto d = engine::divide(ModuleVector::embed(f, 1, 0), as_vectors(gb.generators()),
                                with_witness);
  NormalForm out{d.remainder.component(0), std::nullopt};
  if (with_witness) out.witness = d.quotients;
  return out;
}

bool is_member(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).remainder.is_zero();
}

std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb) {
  auto out = monomial_ideal::standard_monomials(gb.leading_monomials(), gb.ring().nvars());
  if (out) {
    const auto& order = gb.ring().order();
    std::sort(out->begin(), out->end(),
              [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  }
  return out;
}

std::size_t krull_dimension(const GroebnerBasis& gb) {
  const int d = monomial_ideal::dimension(gb.leading_monomials(), gb.ring().nvars());
  if (d < 0) throw Error(ErrorCode::kUnitIdeal, "the ideal contains 1");
  return static_cast<std::size_t>(d);
}

bool origin_support_check(const GroebnerBasis& gb) {
  const auto count = monomial_ideal::count_standard_monomials(gb.leading_monomials(),
                                                              gb.ring().nvars());
  if (!count) throw Error(ErrorCode::kNotZeroDimensional, "ideal is not zero-dimensional");
  // A nilpotent endomorphism of a vector space of dimension n satisfies t^n = 0.
  const auto exponent = static_cast<std::uint32_t>(*count);
  for (std::size_t v = 0; v < gb.ring().nvars(); ++v) {
    const Polynomial power = Polynomial::monomial(gb.ring().base(), Monomial::variable(v, exponent),
                                                  Scalar::one(gb.ring().field()));
    if (!is_member(power, gb)) return false;
  }
  return true;
}

bool verify_groebner(const GroebnerBasis& gb) {
  return engine::satisfies_s_pair_criterion(as_vectors(gb.generators()));
}

}  // namespace mcalc
