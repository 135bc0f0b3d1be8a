#include "mcalc/monomial.hpp"

#include <limits>

#include "mcalc/error.hpp"

namespace mcalc {

namespace {

constexpr std::uint32_t kMaxExponent = std::numeric_limits<std::uint16_t>::max();

// Reverse-lexicographic tie break on [lo, hi): the monomial with the smaller
// exponent in the last differing variable is larger.
std::strong_ordering revlex(const Monomial& a, const Monomial& b, std::size_t lo,
                            std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) < b.exponent(i) ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::uint32_t partial_degree(const Monomial& m, std::size_t lo, std::size_t hi) {
  std::uint32_t d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += m.exponent(i);
  return d;
}

}  // namespace

Monomial Monomial::from_exponents(std::span<const std::uint32_t> exps) {
  if (exps.size() > kMaxVariables)
    throw Error(ErrorCode::kInvalidArgument,
                "at most " + std::to_string(kMaxVariables) + " variables are supported");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > kMaxExponent) throw Error(ErrorCode::kInvalidArgument, "exponent overflow");
    m.exps_[i] = static_cast<std::uint16_t>(exps[i]);
    m.degree_ += exps[i];
  }
  return m;
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  if (index >= kMaxVariables) throw Error(ErrorCode::kInvalidArgument, "variable index out of range");
  if (power > kMaxExponent) throw Error(ErrorCode::kInvalidArgument, "exponent overflow");
  Monomial m;
  m.exps_[index] = static_cast<std::uint16_t>(power);
  m.degree_ = power;
  return m;
}

std::vector<std::uint32_t> Monomial::exponents(std::size_t nvars) const {
  return std::vector<std::uint32_t>(exps_.begin(), exps_.begin() + nvars);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const std::uint32_t e = std::uint32_t{exps_[i]} + o.exps_[i];
    if (e > kMaxExponent) throw Error(ErrorCode::kInvalidArgument, "exponent overflow");
    m.exps_[i] = static_cast<std::uint16_t>(e);
  }
  m.degree_ = degree_ + o.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    m.exps_[i] = static_cast<std::uint16_t>(exps_[i] - o.exps_[i]);
  m.degree_ = degree_ - o.degree_;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

std::size_t Monomial::support_size(std::size_t* index) const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] == 0) continue;
    ++count;
    if (index != nullptr) *index = i;
  }
  return count;
}

std::size_t Monomial::hash() const {
  std::size_t h = degree_;
  for (auto e : exps_) h = h * 1000003u ^ e;
  return h;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::kGrevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex(a, b, 0, kMaxVariables);
    case OrderKind::kLex:
      for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) <=> b.exponent(i);
      return std::strong_ordering::equal;
    case OrderKind::kBlock: {
      const std::size_t s = std::min(split_, kMaxVariables);
      const auto da = partial_degree(a, 0, s), db = partial_degree(b, 0, s);
      if (da != db) return da <=> db;
      if (auto c = revlex(a, b, 0, s); c != 0) return c;
      const auto ea = partial_degree(a, s, kMaxVariables), eb = partial_degree(b, s, kMaxVariables);
      if (ea != eb) return ea <=> eb;
      return revlex(a, b, s, kMaxVariables);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::kGrevlex: return "grevlex";
    case OrderKind::kLex: return "lex";
    case OrderKind::kBlock: return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

}  // namespace mcalc
