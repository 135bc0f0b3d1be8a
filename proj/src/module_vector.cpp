#include "mcalc/module_vector.hpp"

#include <algorithm>

#include "mcalc/error.hpp"

namespace mcalc {

namespace {

void require_rank(const ModuleVector& a, const ModuleVector& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.rank() != b.rank())
    throw Error(ErrorCode::kInvalidArgument, "module vectors of different rank");
}

// a + sign * (c * m * b), skipping nothing; `sign` folded into c by callers.
std::vector<VectorTerm> merge_scaled(const std::vector<VectorTerm>& a,
                                     const std::vector<VectorTerm>& b, const Monomial& m,
                                     const Scalar& c, const MonomialOrder& order,
                                     std::size_t a_begin = 0) {
  std::vector<VectorTerm> out;
  out.reserve(a.size() - a_begin + b.size());
  std::size_t i = a_begin, j = 0;
  const bool unit_shift = m.is_one();
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Monomial bm = unit_shift ? b[j].mono : b[j].mono * m;
    if (i == a.size()) {
      out.push_back(VectorTerm{b[j].position, bm, b[j].coeff * c});
      ++j;
      continue;
    }
    const auto cmp = compare_pot(order, a[i].position, a[i].mono, b[j].position, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(VectorTerm{b[j].position, bm, b[j].coeff * c});
      ++j;
    } else {
      Scalar s = a[i].coeff + b[j].coeff * c;
      if (!s.is_zero()) out.push_back(VectorTerm{a[i].position, a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ModuleVector ModuleVector::from_terms(PolyRingPtr ring, std::size_t rank,
                                      std::vector<VectorTerm> terms) {
  const auto& order = ring->order();
  for (const auto& t : terms)
    if (t.position >= rank) throw Error(ErrorCode::kInvalidArgument, "position out of range");
  std::sort(terms.begin(), terms.end(), [&](const VectorTerm& a, const VectorTerm& b) {
    return compare_pot(order, a.position, a.mono, b.position, b.mono) > 0;
  });
  std::vector<VectorTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().position == t.position && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return ModuleVector(std::move(ring), rank, std::move(out));
}

ModuleVector ModuleVector::from_components(PolyRingPtr ring,
                                           const std::vector<Polynomial>& components) {
  std::vector<VectorTerm> terms;
  for (std::size_t p = 0; p < components.size(); ++p) {
    require_same_ring(ring, components[p].ring());
    for (const auto& t : components[p].terms())
      terms.push_back(VectorTerm{static_cast<std::uint32_t>(p), t.mono, t.coeff});
  }
  // Components are already sorted, and positions ascend.
  return ModuleVector(std::move(ring), components.size(), std::move(terms));
}

ModuleVector ModuleVector::unit(PolyRingPtr ring, std::size_t rank, std::size_t position) {
  if (position >= rank) throw Error(ErrorCode::kInvalidArgument, "position out of range");
  const Scalar one = Scalar::one(ring->field());
  return ModuleVector(std::move(ring), rank,
                      {VectorTerm{static_cast<std::uint32_t>(position), Monomial(), one}});
}

ModuleVector ModuleVector::embed(const Polynomial& f, std::size_t rank, std::size_t position) {
  if (position >= rank) throw Error(ErrorCode::kInvalidArgument, "position out of range");
  std::vector<VectorTerm> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms())
    terms.push_back(VectorTerm{static_cast<std::uint32_t>(position), t.mono, t.coeff});
  return ModuleVector(f.ring(), rank, std::move(terms));
}

Polynomial ModuleVector::component(std::size_t position) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.position == position) out.push_back(Term{t.mono, t.coeff});
  return Polynomial::from_terms(ring_, std::move(out));
}

std::vector<Polynomial> ModuleVector::components() const {
  std::vector<std::vector<Term>> parts(rank_);
  for (const auto& t : terms_) parts[t.position].push_back(Term{t.mono, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring_, std::move(p)));
  return out;
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  require_rank(*this, o);
  return ModuleVector(ring_, rank_,
                      merge_scaled(terms_, o.terms_, Monomial(), Scalar::one(ring_->field()),
                                   ring_->order()));
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
  require_rank(*this, o);
  return ModuleVector(ring_, rank_,
                      merge_scaled(terms_, o.terms_, Monomial(), -Scalar::one(ring_->field()),
                                   ring_->order()));
}

ModuleVector ModuleVector::operator-() const { return scaled(-Scalar::one(ring_->field())); }

ModuleVector ModuleVector::scaled(const Scalar& c) const { return times_term(Monomial(), c); }

ModuleVector ModuleVector::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return ModuleVector(ring_, rank_);
  std::vector<VectorTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(VectorTerm{t.position, t.mono * m, t.coeff * c});
  return ModuleVector(ring_, rank_, std::move(out));
}

ModuleVector ModuleVector::times(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  ModuleVector out(ring_, rank_);
  for (const auto& t : f.terms())
    out.terms_ = merge_scaled(out.terms_, terms_, t.mono, t.coeff, ring_->order());
  return out;
}

ModuleVector ModuleVector::monic() const {
  if (is_zero() || leading_term().coeff.is_one()) return *this;
  return scaled(leading_term().coeff.inverse());
}

void ModuleVector::subtract_multiple(const ModuleVector& g, const Monomial& m, const Scalar& c) {
  terms_ = merge_scaled(terms_, g.terms_, m, -c, ring_->order());
}

VectorTerm ModuleVector::pop_leading() {
  VectorTerm t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

void ModuleVector::push_trailing(VectorTerm t) { terms_.push_back(std::move(t)); }

ModuleVector ModuleVector::slice(std::size_t offset, std::size_t count) const {
  std::vector<VectorTerm> out;
  for (const auto& t : terms_)
    if (t.position >= offset && t.position < offset + count)
      out.push_back(VectorTerm{static_cast<std::uint32_t>(t.position - offset), t.mono, t.coeff});
  return ModuleVector(ring_, count, std::move(out));
}

ModuleVector ModuleVector::shifted(std::size_t offset, std::size_t new_rank) const {
  if (offset + rank_ > new_rank) throw Error(ErrorCode::kInvalidArgument, "shift out of range");
  std::vector<VectorTerm> out(terms_);
  for (auto& t : out) t.position += static_cast<std::uint32_t>(offset);
  return ModuleVector(ring_, new_rank, std::move(out));
}

std::string ModuleVector::to_string() const {
  std::string out = "(";
  const auto comps = components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i > 0) out += ", ";
    out += comps[i].to_string();
  }
  return out + ")";
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  if (!same_ring(a.ring_, b.ring_) || a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.position != y.position || !(x.mono == y.mono) || !(x.coeff == y.coeff)) return false;
  }
  return true;
}

ModuleVector combine(const PolyRingPtr& ring, std::size_t rank,
                     const std::vector<Polynomial>& coeffs,
                     const std::vector<ModuleVector>& vectors) {
  if (coeffs.size() != vectors.size())
    throw Error(ErrorCode::kInvalidArgument, "coefficient count does not match vector count");
  ModuleVector out(ring, rank);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    out += vectors[i].times(coeffs[i]);
  }
  return out;
}

}  // namespace mcalc
