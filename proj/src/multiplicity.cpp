#include "mcalc/multiplicity.hpp"

#include <numeric>
#include <random>

#include "mcalc/error.hpp"
#include "mcalc/groebner.hpp"

namespace mcalc {

namespace {

long long binomial(int n, int k) {
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::vector<std::string> strings_of(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::vector<Polynomial> concat(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Successive lengths l(M / I^n M), n = 1, 2, ...; I^n + J is kept as a
// reduced Groebner basis and multiplied by I once per step.
class PowerLengths {
 public:
  PowerLengths(const FPModule& m, std::vector<Polynomial> ideal) : m_(m), ideal_(std::move(ideal)) {
    const FPModule first = quotient_by_ideal(m_, ideal_);
    if (!length(first))
      throw Error(ErrorCode::kNotFiniteColength, "M/IM has infinite length for I = (" + joined() + ")");
    if (!supported_at_origin(first))
      throw Error(ErrorCode::kSupportNotAtOrigin, "M/IM is not supported at the origin for I = (" + joined() + ")");
  }

  long long next() {
    if (power_.empty() && n_ == 0) {
      power_ = buchberger(m_.ring(), ideal_).generators();
    } else {
      std::vector<Polynomial> products;
      products.reserve(power_.size() * ideal_.size());
      for (const auto& p : power_)
        for (const auto& f : ideal_) products.push_back(p * f);
      power_ = buchberger(m_.ring(), products).generators();
    }
    ++n_;
    return static_cast<long long>(*length(quotient_by_ideal(m_, power_)));
  }

 private:
  std::string joined() const {
    std::string s;
    for (std::size_t i = 0; i < ideal_.size(); ++i) s += (i ? ", " : "") + ideal_[i].to_string();
    return s;
  }

  const FPModule& m_;
  std::vector<Polynomial> ideal_;
  std::vector<Polynomial> power_;
  std::size_t n_ = 0;
};

}  // namespace

LengthSequence hilbert_samuel_lengths(const FPModule& m, const std::vector<Polynomial>& ideal,
                                      std::size_t count) {
  PowerLengths seq(m, ideal);
  LengthSequence out{ideal, {}};
  for (std::size_t n = 1; n <= count; ++n) out.values.push_back(seq.next());
  return out;
}

std::vector<std::string> ring_warnings(const RingSpec& ring) {
  if (ring.is_homogeneous()) return {};
  return {"quotient ideal is not homogeneous: lengths are those of the polynomial model and agree with "
          "the local ring only if every component of V(J) passes through the origin"};
}

nlohmann::json Multiplicity::to_json() const {
  return {{"value", value}, {"r", r}, {"lengths", lengths}, {"differences", differences}, {"warnings", warnings}};
}

Multiplicity multiplicity_details(const FPModule& m, const std::vector<Polynomial>& ideal, int r) {
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "r must be nonnegative");
  Multiplicity out{0, r, {}, {}, ring_warnings(m.ring())};
  PowerLengths seq(m, ideal);
  std::vector<long long> chi{0};
  for (std::size_t n = 1; n <= kMaxLengthSequence; ++n) {
    chi.push_back(seq.next());
    out.lengths.push_back(chi.back());
    if (static_cast<int>(n) < r) continue;
    long long d = 0;
    for (int k = 0; k <= r; ++k) d += (k % 2 ? -1 : 1) * binomial(r, k) * chi[n - static_cast<std::size_t>(k)];
    out.differences.push_back(d);
    const auto& ds = out.differences;
    if (ds.size() >= 3 && ds[ds.size() - 1] == ds[ds.size() - 2] && ds[ds.size() - 2] == ds[ds.size() - 3]) {
      out.value = d;
      return out;
    }
  }
  std::string tail;
  for (std::size_t i = out.differences.size() >= 5 ? out.differences.size() - 5 : 0; i < out.differences.size(); ++i)
    tail += (tail.empty() ? "" : ", ") + std::to_string(out.differences[i]);
  throw Error(ErrorCode::kNoStabilization,
              "r-th differences did not stabilise by n = " + std::to_string(kMaxLengthSequence) + " (last: " + tail + ")");
}

long long multiplicity(const FPModule& m, const std::vector<Polynomial>& ideal, int r) {
  return multiplicity_details(m, ideal, r).value;
}

long long serre_alternating_sum(const std::vector<Polynomial>& x, const FPModule& m) {
  return alternating_length(koszul_lengths(x, m));
}

Report verify_serre(const FPModule& m, const std::vector<Polynomial>& x) {
  const int r = static_cast<int>(x.size());
  const auto e = multiplicity_details(m, x, r);
  const auto hl = koszul_lengths(x, m);
  nlohmann::json cert = {{"multiplicity", e.to_json()}, {"homology_lengths", hl}};
  return Report::compare("serre", {e.value}, {alternating_length(hl)}, std::move(cert));
}

Report verify_factorization(const FPModule& m, const std::vector<Polynomial>& x,
                            const std::vector<Polynomial>& y) {
  const auto joint = koszul_lengths(concat(x, y), m);
  const auto hy = koszul_homologies(y, m);
  long long right = 0;
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t q = 0; q < hy.size(); ++q) {
    const auto lp = koszul_lengths(x, hy[q]);
    table.push_back(lp);
    right += (q % 2 ? -1 : 1) * alternating_length(lp);
  }
  nlohmann::json cert = {{"joint_lengths", joint}, {"double_lengths", table}};
  return Report::compare("factor", {alternating_length(joint)}, {right}, std::move(cert));
}

Report verify_vanish(const FPModule& m, const std::vector<Polynomial>& x, std::size_t i, unsigned k) {
  if (i >= x.size()) throw Error(ErrorCode::kInvalidArgument, "index out of range for the sequence");
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "exponent must be positive");
  const Polynomial power = x[i].pow(k);
  if (!m.annihilated_by(power))
    throw Error(ErrorCode::kHypothesisFails, "(" + power.to_string() + ") does not annihilate M");
  const auto hl = koszul_lengths(x, m);
  nlohmann::json cert = {{"homology_lengths", hl}, {"annihilator", power.to_string()}};
  return Report::compare("vanish", {alternating_length(hl)}, {0}, std::move(cert));
}

Report verify_serre2(const FPModule& m, const std::vector<Polynomial>& x, const std::vector<Polynomial>& x2) {
  const int r = static_cast<int>(x.size());
  const int s = static_cast<int>(x2.size());
  const auto route1 = multiplicity_details(m, concat(x, x2), r + s);
  const VirtualModule first = phi_apply(x, VirtualModule::of(m));
  const long long route2 = length_evaluation(phi_apply(x2, first));
  long long route3 = 0;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : first.terms()) {
    const long long e = multiplicity(t.module, x2, s);
    route3 += t.coefficient * e;
    terms.push_back({{"coefficient", t.coefficient}, {"rank", t.module.rank()}, {"multiplicity", e}});
  }
  nlohmann::json cert = {{"routes", {route1.value, route2, route3}},
                         {"multiplicity", route1.to_json()},
                         {"phi_x_terms", terms}};
  return Report::compare("serre2", {route1.value, route2}, {route2, route3}, std::move(cert));
}

Report ord_check(const RingSpec& b, const Polynomial& f, const Polynomial& g) {
  const auto dim = krull_dimension(buchberger(b, {}));
  if (dim != 1)
    throw Error(ErrorCode::kNotDimensionOne, "ring has dimension " + std::to_string(dim) + ", expected 1");
  auto colength = [&](const Polynomial& h) -> long long {
    const auto gb = buchberger(b, {h});
    const auto sm = gb.is_unit() ? std::nullopt : standard_monomials(gb);
    if (!sm || !origin_support_check(gb))
      throw Error(ErrorCode::kNotParameter, h.to_string() + " is not a parameter at the origin");
    return static_cast<long long>(sm->size());
  };
  const long long lf = colength(f), lg = colength(g), lfg = colength(f * g);
  nlohmann::json cert = {{"f", f.to_string()}, {"g", g.to_string()}, {"l_f", lf}, {"l_g", lg}, {"l_fg", lfg}};
  return Report::compare("ord", {lfg}, {lf + lg}, std::move(cert));
}

std::string parameter_defect(const RingSpec& a, const std::vector<Polynomial>& f) {
  const auto d = krull_dimension(buchberger(a, {}));
  if (f.size() != d) return "expected " + std::to_string(d) + " elements";
  std::vector<Polynomial> prefix;
  for (std::size_t j = 0; j < f.size(); ++j) {
    prefix.push_back(f[j]);
    const auto gb = buchberger(a, prefix);
    if (gb.is_unit()) return "unit ideal";
    if (krull_dimension(gb) != d - j - 1) return "element " + std::to_string(j + 1) + " does not drop the dimension";
  }
  const auto gb = buchberger(a, prefix);
  if (gb.is_unit()) return "unit ideal";
  if (!standard_monomials(gb)) return "infinite colength";
  if (!origin_support_check(gb)) return "not supported at the origin";
  return "";
}

nlohmann::json SearchResult::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table) {
    nlohmann::json j = {{"ideal", strings_of(row.ideal)}};
    if (row.rejected.empty()) j["e"] = row.e;
    else j["rejected"] = row.rejected;
    rows.push_back(std::move(j));
  }
  nlohmann::json out = {{"status", found ? "FOUND" : "EXHAUSTED"}, {"dimension", dimension}, {"table", rows}};
  if (found) {
    out["ideal"] = strings_of(ideal);
    out["e"] = e;
  }
  return out;
}

SearchResult search_parameters(const RingSpec& a, std::uint64_t p, std::size_t budget, std::uint64_t seed) {
  if (p < 2) throw Error(ErrorCode::kInvalidArgument, "prime must be at least 2");
  const auto& base = a.base();
  const std::size_t n = a.nvars();
  const std::size_t d = krull_dimension(buchberger(a, {}));
  const std::uint32_t cmax = a.field().kind() == FieldKind::kRationals
                                 ? 4u
                                 : std::min<std::uint32_t>(a.field().characteristic() - 1, 4u);
  const FPModule whole = FPModule::free(a, 1);
  SearchResult result;
  result.dimension = static_cast<int>(d);

  auto linear = [&](const std::vector<std::uint32_t>& c) {
    Polynomial f(base);
    for (std::size_t i = 0; i < n; ++i)
      if (c[i]) f += Polynomial::variable(base, i).scaled(Scalar::from_integer(a.field(), c[i]));
    return f;
  };

  // Returns true when the search should stop.
  auto examine = [&](std::vector<Polynomial> ideal) {
    SearchRow row{std::move(ideal), "", 0};
    row.rejected = parameter_defect(a, row.ideal);
    if (row.rejected.empty()) {
      try {
        row.e = multiplicity(whole, row.ideal, static_cast<int>(d));
      } catch (const Error& e) {
        row.rejected = std::string(error_code_name(e.code()));
      }
    }
    result.table.push_back(row);
    if (row.rejected.empty() && std::gcd(static_cast<std::uint64_t>(row.e), p) == 1) {
      result.found = true;
      result.ideal = row.ideal;
      result.e = row.e;
    }
    return result.found || result.table.size() >= budget;
  };
  if (budget == 0) return result;
  if (d == 0) {
    examine({});
    return result;
  }

  // Phase 1: variables, then linear forms with first nonzero coefficient 1
  // and at least two nonzero coefficients, in lexicographic order.
  std::vector<Polynomial> forms;
  for (std::size_t i = 0; i < n; ++i) forms.push_back(Polynomial::variable(base, i));
  {
    std::vector<std::uint32_t> c(n, 0);
    while (true) {
      std::size_t i = n;
      while (i > 0 && c[i - 1] == cmax) c[--i] = 0;
      if (i == 0) break;
      ++c[i - 1];
      const auto nz = std::count_if(c.begin(), c.end(), [](std::uint32_t v) { return v != 0; });
      const auto first = std::find_if(c.begin(), c.end(), [](std::uint32_t v) { return v != 0; });
      if (nz >= 2 && *first == 1) forms.push_back(linear(c));
    }
  }
  // d-subsets in colexicographic order: all subsets with largest index m
  // before any with largest index m + 1.
  for (std::size_t top = d - 1; top < forms.size(); ++top) {
    std::vector<std::size_t> idx(d);
    for (std::size_t j = 0; j + 1 < d; ++j) idx[j] = j;
    idx[d - 1] = top;
    while (true) {
      std::vector<Polynomial> cand;
      for (auto k : idx) cand.push_back(forms[k]);
      if (examine(std::move(cand))) return result;
      // Next (d-1)-subset of [0, top) in lexicographic order.
      std::size_t i = d - 1;
      while (i > 0 && idx[i - 1] == top - d + i) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j + 1 < d; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  // Phase 2: seeded random linear forms plus sparse degree-2 terms.
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<Polynomial> cand;
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<std::uint32_t> c(n);
      for (auto& v : c) v = static_cast<std::uint32_t>(rng() % (cmax + 1));
      Polynomial f = linear(c);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u; v < n; ++v)
          if (rng() % 4 == 0) {
            const auto coeff = Scalar::from_integer(a.field(), static_cast<long>(1 + rng() % cmax));
            f += Polynomial::variable(base, u) * Polynomial::variable(base, v).scaled(coeff);
          }
      cand.push_back(std::move(f));
    }
    if (examine(std::move(cand))) return result;
  }
}

}  // namespace mcalc
