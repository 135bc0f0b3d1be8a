#include "mcalc/verifysuite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "mcalc/error.hpp"
#include "mcalc/groebner.hpp"
#include "mcalc/multiplicity.hpp"
#include "mcalc/session.hpp"

namespace mcalc {

namespace {

constexpr auto kDefinition = ExpectationBasis::kDefinition;
constexpr auto kHand = ExpectationBasis::kHandComputation;
constexpr auto kWorked = ExpectationBasis::kWorkedExample;
constexpr auto kOk = Verdict::kVerified;

struct Fixture {
  RingSpec ring;

  Fixture(const std::string& field, const std::string& vars, const std::string& quotient = "[]")
      : ring(parse_session("field = " + field + "\nvars = " + vars + "\nquotient = " + quotient + "\n").ring) {}

  Polynomial p(const std::string& s) const { return parse_polynomial(ring.base(), s); }
  std::vector<Polynomial> seq(const std::string& s) const { return parse_polynomial_list(ring.base(), s); }
  FPModule cyclic(const std::string& rel) const { return FPModule::cyclic(ring, seq(rel)); }
  FPModule free(std::size_t g = 1) const { return FPModule::free(ring, g); }
  FPModule module(std::size_t g, const std::vector<std::vector<std::string>>& rels) const {
    std::vector<ModuleVector> vs;
    for (const auto& r : rels) {
      std::vector<Polynomial> comps;
      for (const auto& e : r) comps.push_back(p(e));
      vs.push_back(ModuleVector::from_components(ring.base(), comps));
    }
    return FPModule(ring, g, vs);
  }
};

const std::string kBad = "[x^2 + x*y + y^2]";
const std::string kNonCM = "[x*z, x*w, y*z, y*w]";

const std::string kSerre = "Serre's formula: e(M, r) equals the alternating sum of Koszul homology lengths";
const std::string kFactor = "Koszul factorisation: Phi of a concatenated sequence is the composite of the Phi's";
const std::string kVanish = "Koszul vanishing: Phi_x[M] = 0 when a power of some x_i annihilates M";
const std::string kSerre2 = "Compatibility of multiplicity with Phi: three evaluations of a class agree";
const std::string kOrd = "Order function on a one-dimensional ring is additive: l(B/fgB) = l(B/fB) + l(B/gB)";
const std::string kBadExample = "Residue-field obstruction: over F2 every parameter of F2[x,y]/(x^2+xy+y^2) has even colength";
const std::string kShadow = "Class relation [A/qA] = n [A/(q, Y)] for A = k[x,y]/(y^n), equicharacteristic form";
const std::string kModified = "Modified multiplicity e(M, r) vanishes for r above dim M";
const std::string kProposition = "Class reduction: a module of dimension d - m represents Phi_x[M]";

Report ell_sum_relation(const Fixture& fx, int n, const std::string& f) {
  const auto x = fx.seq(f);
  const long long top = serre_alternating_sum(x, fx.cyclic("y^" + std::to_string(n)));
  const long long base = serre_alternating_sum(x, fx.cyclic("y"));
  return Report::compare("class relation", {top}, {n * base}, {{"n", n}, {"f", f}, {"base", base}});
}

Report parity_report() {
  const Fixture fx("F2", "x, y", kBad);
  const auto& ring = fx.ring;
  const long long lx = static_cast<long long>(standard_monomials(buchberger(ring, {fx.p("x")}))->size());
  std::mt19937_64 rng(2024);
  nlohmann::json sampled = nlohmann::json::array();
  long long odd = 0;
  std::size_t tries = 0;
  while (sampled.size() < 20 && tries < 1000) {
    ++tries;
    Polynomial f(ring.base());
    for (std::uint32_t a = 0; a <= 3; ++a)
      for (std::uint32_t b = 0; a + b <= 3; ++b)
        if (a + b > 0 && rng() % 2)
          f += Polynomial::monomial(ring.base(), Monomial::from_exponents(std::vector<std::uint32_t>{a, b}),
                                    Scalar::one(ring.field()));
    const auto gb = buchberger(ring, {f});
    if (gb.is_unit()) continue;
    const auto sm = standard_monomials(gb);
    if (!sm || !origin_support_check(gb)) continue;
    sampled.push_back({{"f", f.to_string()}, {"length", sm->size()}});
    odd += static_cast<long long>(sm->size() % 2);
  }
  return Report::compare("example-bad parity", {lx, odd, static_cast<long long>(sampled.size())}, {2, 0, 20},
                         {{"sampled", sampled}});
}

Report search_report(std::uint64_t p) {
  const Fixture fx("F2", "x, y", kBad);
  const auto res = search_parameters(fx.ring, p, 50, 7);
  long long odd = 0;
  for (const auto& row : res.table)
    if (row.rejected.empty() && row.e % 2) ++odd;
  return Report::compare("search p=" + std::to_string(p), {res.found ? 1 : 0, res.found ? res.e : 0, odd},
                         {p == 2 ? 0 : 1, p == 2 ? 0 : 2, 0}, res.to_json());
}

Report modified_report(const Fixture& fx, const FPModule& m, const std::string& ideal, int r) {
  const auto e = multiplicity_details(m, fx.seq(ideal), r);
  return Report::compare("modified multiplicity", {e.value}, {0},
                         {{"multiplicity", e.to_json()}, {"dimension", module_dimension(m)}});
}

std::vector<Scenario> build() {
  std::vector<Scenario> s;
  auto add = [&](std::string id, const std::string& citation, std::vector<std::string> tags, std::string setup,
                 Expectation exp, std::function<Report()> body) {
    s.push_back(Scenario{std::move(id), citation, std::move(tags), std::move(setup), std::move(exp), std::move(body)});
  };

  // Serre's formula.
  add("serre-regular-sequence", kSerre, {"theorem"}, "Q[x,y], x = (x^2, y)", {kHand, kOk, {2}, {2}}, [] {
    const Fixture fx("Q", "x, y");
    return verify_serre(fx.free(), fx.seq("x^2, y"));
  });
  add("serre-maximal-ideal", kSerre, {"theorem"}, "Q[x,y], x = (x, y)", {kDefinition, kOk, {1}, {1}}, [] {
    const Fixture fx("Q", "x, y");
    return verify_serre(fx.free(), fx.seq("x, y"));
  });
  add("serre-bad-ring-overcut", kSerre, {"theorem", "example"}, "F2[x,y]/(x^2+xy+y^2), x = (x, y)",
      {kHand, kOk, {0}, {0}}, [] {
        const Fixture fx("F2", "x, y", kBad);
        return verify_serre(fx.free(), fx.seq("x, y"));
      });
  add("serre-cusp", kSerre, {"theorem"}, "Q[x,y]/(y^2 - x^3), x = (x)", {kHand, kOk, {2}, {2}}, [] {
    const Fixture fx("Q", "x, y", "[y^2 - x^3]");
    return verify_serre(fx.free(), fx.seq("x"));
  });
  add("serre-non-cohen-macaulay", kSerre, {"theorem"}, "Q[x,y,z,w]/(xz,xw,yz,yw), x = (x+z, y+w)",
      {kHand, kOk, {2}, {2}}, [] {
        const Fixture fx("Q", "x, y, z, w", kNonCM);
        return verify_serre(fx.free(), fx.seq("x + z, y + w"));
      });
  add("serre-non-regular-sequence", kSerre, {"theorem"}, "Q[x,y]/(x^2, xy), x = (y)", {kHand, kOk, {1}, {1}}, [] {
    const Fixture fx("Q", "x, y", "[x^2, x*y]");
    return verify_serre(fx.free(), fx.seq("y"));
  });
  add("serre-cubic-thickening", kSerre, {"theorem"}, "Q[x,y]/(y^3), x = (x)", {kHand, kOk, {3}, {3}}, [] {
    const Fixture fx("Q", "x, y", "[y^3]");
    return verify_serre(fx.free(), fx.seq("x"));
  });
  add("serre-two-planes", kSerre, {"theorem"}, "Q[x,y,z]/(xy), x = (x+y, z)", {kHand, kOk, {2}, {2}}, [] {
    const Fixture fx("Q", "x, y, z", "[x*y]");
    return verify_serre(fx.free(), fx.seq("x + y, z"));
  });
  add("serre-rank-two-module", kSerre, {"theorem"}, "Q[x,y]^2/((x, y)), x = (x, y)", {kHand, kOk, {1}, {1}}, [] {
    const Fixture fx("Q", "x, y");
    return verify_serre(fx.module(2, {{"x", "y"}}), fx.seq("x, y"));
  });
  add("serre-rational-function-field", kSerre, {"theorem"}, "F2(t)[x,y]/(x^2 + t*y^2), x = (y)",
      {kHand, kOk, {2}, {2}}, [] {
        const Fixture fx("F2(t)", "x, y", "[x^2 + t*y^2]");
        return verify_serre(fx.free(), fx.seq("y"));
      });

  // Factorisation.
  add("factor-plane", kFactor, {"lemma"}, "Q[x,y], x = (x), y = (y)", {kDefinition, kOk, {1}, {1}}, [] {
    const Fixture fx("Q", "x, y");
    return verify_factorization(fx.free(), fx.seq("x"), fx.seq("y"));
  });
  add("factor-bad-ring", kFactor, {"lemma", "example"}, "F2[x,y]/(x^2+xy+y^2), x = (x), y = (y)",
      {kHand, kOk, {0}, {0}}, [] {
        const Fixture fx("F2", "x, y", kBad);
        return verify_factorization(fx.free(), fx.seq("x"), fx.seq("y"));
      });
  add("factor-killed-module", kFactor, {"lemma"}, "Q[x,y]/(x), x = (x), y = (y)", {kHand, kOk, {0}, {0}}, [] {
    const Fixture fx("Q", "x, y");
    return verify_factorization(fx.cyclic("x"), fx.seq("x"), fx.seq("y"));
  });
  add("factor-non-cohen-macaulay", kFactor, {"lemma"}, "Q[x,y,z,w]/(xz,xw,yz,yw), x = (x+z), y = (y+w)",
      {kHand, kOk, {2}, {2}}, [] {
        const Fixture fx("Q", "x, y, z, w", kNonCM);
        return verify_factorization(fx.free(), fx.seq("x + z"), fx.seq("y + w"));
      });
  add("factor-non-regular", kFactor, {"lemma"}, "Q[x,y]/(x^2, xy), x = (y), y = (x)", {kHand, kOk, {0}, {0}}, [] {
    const Fixture fx("Q", "x, y", "[x^2, x*y]");
    return verify_factorization(fx.free(), fx.seq("y"), fx.seq("x"));
  });
  add("factor-hypersurface", kFactor, {"lemma"}, "Q[x,y,z]/(xz), x = (y), y = (x+z)", {kHand, kOk, {2}, {2}}, [] {
    const Fixture fx("Q", "x, y, z", "[x*z]");
    return verify_factorization(fx.free(), fx.seq("y"), fx.seq("x + z"));
  });
  add("factor-rank-two-module", kFactor, {"lemma"}, "Q[x,y]^2/((x, y)), x = (x), y = (y)",
      {kHand, kOk, {1}, {1}}, [] {
        const Fixture fx("Q", "x, y");
        return verify_factorization(fx.module(2, {{"x", "y"}}), fx.seq("x"), fx.seq("y"));
      });
  add("factor-split-pairs", kFactor, {"lemma"}, "Q[x,y,z,w]/(xz,xw,yz,yw), x = (x+z, y+w), y = (w)",
      {kHand, kOk, {0}, {0}}, [] {
        const Fixture fx("Q", "x, y, z, w", kNonCM);
        return verify_factorization(fx.free(), fx.seq("x + z, y + w"), fx.seq("w"));
      });

  // Vanishing.
  add("vanish-linear", kVanish, {"lemma"}, "Q[x,y]/(x), x = (x, y), x_1 M = 0", {kHand, kOk, {0}, {0}}, [] {
    const Fixture fx("Q", "x, y");
    return verify_vanish(fx.cyclic("x"), fx.seq("x, y"), 0, 1);
  });
  add("vanish-square", kVanish, {"lemma"}, "Q[x]/(x^2), x = (x), x_1^2 M = 0", {kHand, kOk, {0}, {0}}, [] {
    const Fixture fx("Q", "x");
    return verify_vanish(fx.cyclic("x^2"), fx.seq("x"), 0, 2);
  });
  add("vanish-cube-middle", kVanish, {"lemma"}, "Q[x,y,z]/(y^3, xz), x = (x, y, z), x_2^3 M = 0",
      {kHand, kOk, {0}, {0}}, [] {
        const Fixture fx("Q", "x, y, z");
        return verify_vanish(fx.cyclic("y^3, x*z"), fx.seq("x, y, z"), 1, 3);
      });
  add("vanish-bad-ring", kVanish, {"lemma", "example"}, "F2[x,y]/(x^2+xy+y^2) modulo x^2, x = (x, y), x_1^2 M = 0",
      {kHand, kOk, {0}, {0}}, [] {
        const Fixture fx("F2", "x, y", kBad);
        return verify_vanish(fx.cyclic("x^2"), fx.seq("x, y"), 0, 2);
      });
  add("vanish-rank-two", kVanish, {"lemma"}, "(Q[x,y]/(x))^2, x = (x, y), x_1 M = 0", {kHand, kOk, {0}, {0}}, [] {
    const Fixture fx("Q", "x, y");
    return verify_vanish(fx.module(2, {{"x", "0"}, {"0", "x"}}), fx.seq("x, y"), 0, 1);
  });

  // Three routes.
  add("serre2-plane", kSerre2, {"theorem"}, "Q[x,y], x = (x), x' = (y)", {kDefinition, kOk, {1, 1}, {1, 1}}, [] {
    const Fixture fx("Q", "x, y");
    return verify_serre2(fx.free(), fx.seq("x"), fx.seq("y"));
  });
  add("serre2-bad-ring", kSerre2, {"theorem", "example"}, "F2[x,y]/(x^2+xy+y^2), x = (), x' = (x)",
      {kWorked, kOk, {2, 2}, {2, 2}}, [] {
        const Fixture fx("F2", "x, y", kBad);
        return verify_serre2(fx.free(), {}, fx.seq("x"));
      });
  add("serre2-hypersurface", kSerre2, {"theorem"}, "Q[x,y,z]/(xz), x = (y), x' = (x+z)",
      {kHand, kOk, {2, 2}, {2, 2}}, [] {
        const Fixture fx("Q", "x, y, z", "[x*z]");
        return verify_serre2(fx.free(), fx.seq("y"), fx.seq("x + z"));
      });
  add("serre2-non-cohen-macaulay", kSerre2, {"theorem"}, "Q[x,y,z,w]/(xz,xw,yz,yw), x = (x+z), x' = (y+w)",
      {kHand, kOk, {2, 2}, {2, 2}}, [] {
        const Fixture fx("Q", "x, y, z, w", kNonCM);
        return verify_serre2(fx.free(), fx.seq("x + z"), fx.seq("y + w"));
      });

  // Order function.
  add("ord-bad-ring-x-y", kOrd, {"lemma", "example"}, "F2[x,y]/(x^2+xy+y^2), f = x, g = y",
      {kHand, kOk, {4}, {4}}, [] {
        const Fixture fx("F2", "x, y", kBad);
        return ord_check(fx.ring, fx.p("x"), fx.p("y"));
      });
  add("ord-bad-ring-x-x", kOrd, {"lemma", "example"}, "F2[x,y]/(x^2+xy+y^2), f = g = x", {kHand, kOk, {4}, {4}},
      [] {
        const Fixture fx("F2", "x, y", kBad);
        return ord_check(fx.ring, fx.p("x"), fx.p("x"));
      });
  add("ord-line", kOrd, {"lemma"}, "Q[x,y]/(y), f = x^2, g = x^3", {kDefinition, kOk, {5}, {5}}, [] {
    const Fixture fx("Q", "x, y", "[y]");
    return ord_check(fx.ring, fx.p("x^2"), fx.p("x^3"));
  });
  add("ord-cusp", kOrd, {"lemma"}, "Q[x,y]/(y^2 - x^3), f = x, g = y", {kHand, kOk, {5}, {5}}, [] {
    const Fixture fx("Q", "x, y", "[y^2 - x^3]");
    return ord_check(fx.ring, fx.p("x"), fx.p("y"));
  });

  // Worked examples.
  add("example-bad-parity", kBadExample, {"example"}, "F2[x,y]/(x^2+xy+y^2), 20 seeded parameters of degree <= 3",
      {kWorked, kOk, {2, 0, 20}, {2, 0, 20}}, [] { return parity_report(); });
  add("example-bad-search-p2", kBadExample, {"example"}, "search --prime 2 --budget 50 --seed 7",
      {kWorked, kOk, {0, 0, 0}, {0, 0, 0}}, [] { return search_report(2); });
  add("example-bad-search-p3", kBadExample, {"example"}, "search --prime 3 --budget 50 --seed 7",
      {kHand, kOk, {1, 2, 0}, {1, 2, 0}}, [] { return search_report(3); });
  add("yn-class-relation", kShadow, {"example"}, "k[x,y]/(y^3) against k[x,y]/(y), f = x",
      {kHand, kOk, {3}, {3}}, [] {
        const Fixture fx("Q", "x, y");
        return ell_sum_relation(fx, 3, "x");
      });
  add("yn-class-relation-slanted", kShadow, {"example"}, "k[x,y]/(y^4) against k[x,y]/(y), f = x + y",
      {kHand, kOk, {4}, {4}}, [] {
        const Fixture fx("Q", "x, y");
        return ell_sum_relation(fx, 4, "x + y");
      });

  // Modified multiplicity.
  add("modified-plane-r3", kModified, {"property"}, "e_(x,y)(Q[x,y], 3)", {kDefinition, kOk, {0}, {0}}, [] {
    const Fixture fx("Q", "x, y");
    return modified_report(fx, fx.free(), "x, y", 3);
  });
  add("modified-bad-ring-r2", kModified, {"property", "example"}, "e_(x,y)(F2[x,y]/(x^2+xy+y^2), 2)",
      {kDefinition, kOk, {0}, {0}}, [] {
        const Fixture fx("F2", "x, y", kBad);
        return modified_report(fx, fx.free(), "x, y", 2);
      });
  add("modified-line-r2", kModified, {"property"}, "e_(x^2,y)(Q[x,y]/(y), 2)", {kDefinition, kOk, {0}, {0}}, [] {
    const Fixture fx("Q", "x, y");
    return modified_report(fx, fx.cyclic("y"), "x^2, y", 2);
  });
  add("modified-plane-r2", kModified, {"property"}, "e_(x,y)(Q[x,y], 2)", {kDefinition, kOk, {1}, {1}}, [] {
    const Fixture fx("Q", "x, y");
    const auto e = multiplicity_details(fx.free(), fx.seq("x, y"), 2);
    return Report::compare("multiplicity", {e.value}, {1}, e.to_json());
  });

  // Class reduction.
  add("reduce-class-crossing", kProposition, {"theorem"}, "Q[x,y]/(xy), x = (x+y)", {kHand, kOk, {2, 0}, {2, 0}},
      [] {
        const Fixture fx("Q", "x, y");
        const auto m = fx.cyclic("x*y");
        const auto x = fx.seq("x + y");
        const auto n = reduce_class(x, m);
        const long long phi = length_evaluation(phi_apply(x, VirtualModule::of(m)));
        return Report::compare("reduce_class", {static_cast<long long>(*length(n)), module_dimension(n)}, {phi, 0});
      });
  add("reduce-class-torsion", kProposition, {"theorem"}, "Q[x,y,z]/(x*y^2, y^3), x = (x, z)",
      {kHand, kOk, {2, 0}, {2, 0}}, [] {
        const Fixture fx("Q", "x, y, z");
        const auto m = fx.cyclic("x*y^2, y^3");
        const auto x = fx.seq("x, z");
        const auto n = reduce_class(x, m);
        const long long phi = length_evaluation(phi_apply(x, VirtualModule::of(m)));
        return Report::compare("reduce_class", {static_cast<long long>(*length(n)), module_dimension(n)}, {phi, 0});
      });

  std::sort(s.begin(), s.end(), [](const Scenario& a, const Scenario& b) { return a.id < b.id; });
  return s;
}

Report run(const Scenario& sc) {
  Report computed;
  try {
    computed = sc.body();
  } catch (const Error& e) {
    Report r{sc.id, {}, {}, Verdict::kInconclusive, {{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}}};
    return r;
  }
  const auto& exp = sc.expectation;
  const bool match = computed.verdict == exp.verdict && computed.left == exp.left && computed.right == exp.right;
  Report out{sc.id, computed.left, computed.right, match ? Verdict::kVerified : Verdict::kRefuted, nlohmann::json::object()};
  out.certificate = {{"citation", sc.citation},
                     {"setup", sc.setup},
                     {"tags", sc.tags},
                     {"engine_verdict", std::string(verdict_name(computed.verdict))},
                     {"expected", {{"basis", std::string(expectation_basis_name(exp.basis))},
                                   {"verdict", std::string(verdict_name(exp.verdict))},
                                   {"left", exp.left},
                                   {"right", exp.right}}},
                     {"details", computed.certificate}};
  return out;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("MCALC_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::string_view expectation_basis_name(ExpectationBasis b) {
  switch (b) {
    case ExpectationBasis::kDefinition: return "definition";
    case ExpectationBasis::kHandComputation: return "hand computation";
    case ExpectationBasis::kWorkedExample: return "worked example";
  }
  return "definition";
}

const std::vector<Scenario>& scenarios() {
  static const std::vector<Scenario> registry = build();
  return registry;
}

Report run_scenario(std::string_view id) {
  for (const auto& sc : scenarios())
    if (sc.id == id) return run(sc);
  throw Error(ErrorCode::kUnknownScenario, "no scenario '" + std::string(id) + "'");
}

nlohmann::json SuiteSummary::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : results) rows.push_back(r.report.to_json());
  return {{"verified", verified}, {"refuted", refuted}, {"inconclusive", inconclusive}, {"scenarios", rows}};
}

std::string SuiteSummary::to_table() const {
  std::size_t width = 8;
  for (const auto& r : results) width = std::max(width, r.id.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "scenario" << "  " << std::setw(12) << "verdict"
      << "left / right\n";
  for (const auto& r : results) {
    auto join = [](const std::vector<long long>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s;
    };
    out << std::setw(static_cast<int>(width)) << r.id << "  " << std::setw(12) << verdict_name(r.report.verdict)
        << join(r.report.left) << " / " << join(r.report.right) << '\n';
  }
  out << verified << " verified, " << refuted << " refuted, " << inconclusive << " inconclusive\n";
  return out.str();
}

SuiteSummary run_all(std::string_view tag) {
  std::vector<const Scenario*> picked;
  for (const auto& sc : scenarios())
    if (tag.empty() || std::find(sc.tags.begin(), sc.tags.end(), tag) != sc.tags.end()) picked.push_back(&sc);

  std::vector<Report> reports(picked.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < picked.size(); i = next++) reports[i] = run(*picked[i]);
  };
  const std::size_t n = std::min(worker_count(), std::max<std::size_t>(picked.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  SuiteSummary summary;
  for (std::size_t i = 0; i < picked.size(); ++i) {
    switch (reports[i].verdict) {
      case Verdict::kVerified: ++summary.verified; break;
      case Verdict::kRefuted: ++summary.refuted; break;
      case Verdict::kInconclusive: ++summary.inconclusive; break;
    }
    summary.results.push_back(SuiteResult{picked[i]->id, std::move(reports[i])});
  }
  return summary;
}

}  // namespace mcalc
