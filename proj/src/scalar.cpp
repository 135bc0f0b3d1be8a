#include "mcalc/scalar.hpp"

#include <sstream>

#include "mcalc/error.hpp"

namespace mcalc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr std::uint64_t kMaxCharacteristic = 1ULL << 31;

std::uint32_t checked_characteristic(std::uint64_t p) {
  if (p >= kMaxCharacteristic || !is_prime(p))
    throw Error(ErrorCode::kBadCharacteristic,
                "characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return static_cast<std::uint32_t>(p);
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t reduce_mpz(const mpz_class& n, std::uint32_t p) {
  mpz_class r = n % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  return FieldSpec(FieldKind::kPrimeField, checked_characteristic(p));
}

FieldSpec FieldSpec::rational_functions(std::uint64_t p) {
  return FieldSpec(FieldKind::kRationalFunctions, checked_characteristic(p));
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::kRationals: return "Q";
    case FieldKind::kPrimeField: return "F" + std::to_string(characteristic_);
    case FieldKind::kRationalFunctions:
      return "F" + std::to_string(characteristic_) + "(t)";
  }
  return "?";
}

namespace detail {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

FpPoly::FpPoly(std::uint32_t modulus, std::vector<std::uint32_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= modulus_;
  trim();
}

FpPoly FpPoly::constant(std::uint32_t modulus, std::uint32_t c) {
  return FpPoly(modulus, {c});
}

FpPoly FpPoly::variable(std::uint32_t modulus) { return FpPoly(modulus, {0, 1}); }

void FpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<std::uint32_t> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(out[i]) + o.coeffs_[i]) % modulus_);
  return FpPoly(modulus_, std::move(out));
}

FpPoly FpPoly::negated() const {
  std::vector<std::uint32_t> out(coeffs_);
  for (auto& c : out) c = c == 0 ? 0 : modulus_ - c;
  return FpPoly(modulus_, std::move(out));
}

FpPoly FpPoly::operator-(const FpPoly& o) const { return *this + o.negated(); }

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly(modulus_, {});
  std::vector<std::uint64_t> acc(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(coeffs_[i]) * o.coeffs_[j]) % modulus_;
  std::vector<std::uint32_t> out(acc.begin(), acc.end());
  return FpPoly(modulus_, std::move(out));
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
  std::vector<std::uint32_t> out(coeffs_);
  for (auto& x : out) x = mulmod(x, c, modulus_);
  return FpPoly(modulus_, std::move(out));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  std::vector<std::uint32_t> rem(coeffs_);
  const int dd = divisor.degree();
  std::vector<std::uint32_t> quot(rem.size() > static_cast<std::size_t>(dd) ? rem.size() - dd : 0, 0);
  const std::uint32_t inv = mod_inverse(divisor.leading(), modulus_);
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    const std::uint32_t c = mulmod(rem[k], inv, modulus_);
    if (c == 0) continue;
    quot[k - dd] = c;
    for (int i = 0; i <= dd; ++i) {
      const std::uint32_t sub = mulmod(c, divisor.coeffs_[i], modulus_);
      rem[k - dd + i] = (rem[k - dd + i] + modulus_ - sub) % modulus_;
    }
  }
  return {FpPoly(modulus_, std::move(quot)), FpPoly(modulus_, std::move(rem))};
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inverse(leading(), modulus_));
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const std::uint32_t c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << "*";
    out << "t";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalFunction::RationalFunction(FpPoly num, FpPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::kDivisionByZero, "zero denominator in F_p(t)");
  const std::uint32_t p = den.modulus();
  if (num.is_zero()) {
    num_ = FpPoly(p, {});
    den_ = FpPoly::constant(p, 1);
    return;
  }
  const FpPoly g = gcd(num, den);
  num = num.divmod(g).first;
  den = den.divmod(g).first;
  const std::uint32_t inv = mod_inverse(den.leading(), p);
  num_ = num.scaled(inv);
  den_ = den.scaled(inv);
}

}  // namespace detail

using detail::FpPoly;
using detail::RationalFunction;
using detail::Residue;

Scalar Scalar::zero(const FieldSpec& field) { return from_integer(field, 0); }

Scalar Scalar::one(const FieldSpec& field) { return from_integer(field, 1); }

Scalar Scalar::from_integer(const FieldSpec& field, const mpz_class& n) {
  return from_fraction(field, n, 1);
}

Scalar Scalar::from_fraction(const FieldSpec& field, const mpz_class& num,
                             const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  const std::uint32_t p = field.characteristic();
  switch (field.kind()) {
    case FieldKind::kRationals: {
      mpq_class q(num, den);
      q.canonicalize();
      return Scalar(Rep(std::move(q)));
    }
    case FieldKind::kPrimeField: {
      const std::uint32_t d = reduce_mpz(den, p);
      return Scalar(Rep(Residue{mulmod(reduce_mpz(num, p), detail::mod_inverse(d, p), p), p}));
    }
    case FieldKind::kRationalFunctions: {
      const std::uint32_t d = reduce_mpz(den, p);
      const std::uint32_t c = mulmod(reduce_mpz(num, p), detail::mod_inverse(d, p), p);
      return Scalar(Rep(RationalFunction(FpPoly::constant(p, c), FpPoly::constant(p, 1))));
    }
  }
  throw Error(ErrorCode::kUnknownFieldKind, "unknown field kind");
}

Scalar Scalar::transcendental(const FieldSpec& field) {
  if (field.kind() != FieldKind::kRationalFunctions)
    throw Error(ErrorCode::kInvalidArgument, "t is only defined in F_p(t)");
  const std::uint32_t p = field.characteristic();
  return Scalar(Rep(RationalFunction(FpPoly::variable(p), FpPoly::constant(p, 1))));
}

FieldSpec Scalar::field() const {
  switch (rep_.index()) {
    case 0: return FieldSpec::rationals();
    case 1: return FieldSpec::prime_field(std::get<Residue>(rep_).modulus);
    default: return FieldSpec::rational_functions(std::get<RationalFunction>(rep_).modulus());
  }
}

bool Scalar::is_zero() const {
  switch (rep_.index()) {
    case 0: return std::get<mpq_class>(rep_) == 0;
    case 1: return std::get<Residue>(rep_).value == 0;
    default: return std::get<RationalFunction>(rep_).numerator().is_zero();
  }
}

bool Scalar::is_one() const {
  switch (rep_.index()) {
    case 0: return std::get<mpq_class>(rep_) == 1;
    case 1: return std::get<Residue>(rep_).value == 1;
    default: {
      const auto& r = std::get<RationalFunction>(rep_);
      return r.denominator().degree() == 0 && r.numerator().degree() == 0 &&
             r.numerator().leading() == 1;
    }
  }
}

bool Scalar::is_negative() const {
  return rep_.index() == 0 && std::get<mpq_class>(rep_) < 0;
}

void Scalar::check_same_field(const Scalar& o) const {
  bool same = rep_.index() == o.rep_.index();
  if (same && rep_.index() == 1)
    same = std::get<Residue>(rep_).modulus == std::get<Residue>(o.rep_).modulus;
  if (same && rep_.index() == 2)
    same = std::get<RationalFunction>(rep_).modulus() ==
           std::get<RationalFunction>(o.rep_).modulus();
  if (!same)
    throw Error(ErrorCode::kFieldMismatch,
                "scalars from " + field().name() + " and " + o.field().name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  switch (rep_.index()) {
    case 0: return Scalar(Rep(mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_))));
    case 1: {
      const auto a = std::get<Residue>(rep_), b = std::get<Residue>(o.rep_);
      return Scalar(Rep(Residue{static_cast<std::uint32_t>(
                                    (static_cast<std::uint64_t>(a.value) + b.value) % a.modulus),
                                a.modulus}));
    }
    default: {
      const auto& a = std::get<RationalFunction>(rep_);
      const auto& b = std::get<RationalFunction>(o.rep_);
      return Scalar(Rep(RationalFunction(
          a.numerator() * b.denominator() + b.numerator() * a.denominator(),
          a.denominator() * b.denominator())));
    }
  }
}

Scalar Scalar::operator-() const {
  switch (rep_.index()) {
    case 0: return Scalar(Rep(mpq_class(-std::get<mpq_class>(rep_))));
    case 1: {
      const auto a = std::get<Residue>(rep_);
      return Scalar(Rep(Residue{a.value == 0 ? 0 : a.modulus - a.value, a.modulus}));
    }
    default: {
      const auto& a = std::get<RationalFunction>(rep_);
      return Scalar(Rep(RationalFunction(a.numerator().negated(), a.denominator())));
    }
  }
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  switch (rep_.index()) {
    case 0: return Scalar(Rep(mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_))));
    case 1: {
      const auto a = std::get<Residue>(rep_), b = std::get<Residue>(o.rep_);
      return Scalar(Rep(Residue{mulmod(a.value, b.value, a.modulus), a.modulus}));
    }
    default: {
      const auto& a = std::get<RationalFunction>(rep_);
      const auto& b = std::get<RationalFunction>(o.rep_);
      return Scalar(Rep(RationalFunction(a.numerator() * b.numerator(),
                                         a.denominator() * b.denominator())));
    }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  switch (rep_.index()) {
    case 0: return Scalar(Rep(mpq_class(1 / std::get<mpq_class>(rep_))));
    case 1: {
      const auto a = std::get<Residue>(rep_);
      return Scalar(Rep(Residue{detail::mod_inverse(a.value, a.modulus), a.modulus}));
    }
    default: {
      const auto& a = std::get<RationalFunction>(rep_);
      return Scalar(Rep(RationalFunction(a.denominator(), a.numerator())));
    }
  }
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

std::string Scalar::to_string() const {
  switch (rep_.index()) {
    case 0: return std::get<mpq_class>(rep_).get_str();
    case 1: return std::to_string(std::get<Residue>(rep_).value);
    default: {
      const auto& a = std::get<RationalFunction>(rep_);
      const auto wrap = [](const FpPoly& f) {
        const std::string s = f.to_string();
        return s.find_first_of(" *") == std::string::npos ? s : "(" + s + ")";
      };
      if (a.denominator().degree() == 0) return a.numerator().to_string();
      return wrap(a.numerator()) + "/" + wrap(a.denominator());
    }
  }
}

bool Scalar::is_compound() const {
  if (rep_.index() != 2) return false;
  return to_string().find_first_of(" /") != std::string::npos;
}

}  // namespace mcalc
