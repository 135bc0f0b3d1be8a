#include <random>

#include "doctest.h"
#include "mcalc/error.hpp"
#include "mcalc/fpmodule.hpp"
#include "mcalc/groebner.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mcalc;
using namespace mcalc::testing;

namespace {

std::vector<std::string> vstrings(const std::vector<ModuleVector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

long len(const FPModule& m) {
  const auto l = length(m);
  return l ? static_cast<long>(*l) : -1;
}

}  // namespace

TEST_CASE("module_gb") {
  const auto r = ring("Q", "x, y");
  CHECK(vstrings(module_gb(r, {vec(r, {"x"}), vec(r, {"y^2"})}, 1)) ==
        std::vector<std::string>{"(x)", "(y^2)"});
  const std::vector<ModuleVector> four{vec(r, {"x", "0"}), vec(r, {"0", "x"}), vec(r, {"y", "0"}),
                                       vec(r, {"0", "y"})};
  CHECK(module_gb(r, four, 2).size() == 4);
  CHECK(oracle::same_submodule(module_gb(r, four, 2), four, r.base(), 2));

  const auto a = ring("Q", "x, y", "[x^2 + x*y + y^2]");
  CHECK(vstrings(module_gb(a, {vec(a, {"x"})}, 1)) == std::vector<std::string>{"(x)", "(y^2)"});
}

TEST_CASE("syzygies") {
  const auto r = ring("Q", "x, y");
  CHECK(vstrings(syzygies({vec(r, {"x"}), vec(r, {"y"})})) == std::vector<std::string>{"(y, -x)"});
  const auto s = syzygies({vec(r, {"x"}), vec(r, {"x"})});
  CHECK(oracle::same_submodule(s, {vec(r, {"1", "-1"})}, r.base(), 2));
  CHECK(syzygies({vec(r, {"x^2 + y"})}).empty());
  CHECK(syzygies({}).empty());
}

TEST_CASE("preimage_submodule") {
  const auto r = ring("Q", "x, y");
  CHECK(vstrings(preimage_submodule(r.base(), 1, 1, {vec(r, {"x^2"})}, {vec(r, {"x"})})) ==
        std::vector<std::string>{"(x)"});
  const auto all = preimage_submodule(r.base(), 2, 1, {}, {vec(r, {"0"}), vec(r, {"0"})});
  CHECK(vstrings(all) == std::vector<std::string>{"(0, 1)", "(1, 0)"});
  const auto full = preimage_submodule(r.base(), 1, 2, {vec(r, {"1", "0"}), vec(r, {"0", "1"})},
                                       {vec(r, {"x", "y^3"})});
  CHECK(vstrings(full) == std::vector<std::string>{"(1)"});
  // Restricted to span(K) = (y).
  CHECK(vstrings(preimage_submodule(r.base(), 1, 1, {vec(r, {"y"})}, {vec(r, {"x^2"})}, {vec(r, {"x"})})) ==
        std::vector<std::string>{"(x*y)"});
}

TEST_CASE("kernel_of_map") {
  const auto r = ring("Q", "x, y");
  const auto m = FPModule::cyclic(r, polys(r, "x^2"));
  const auto k = kernel_of_map(ModuleMap(m, m, {vec(r, {"x"})}));
  CHECK(vstrings(k.embedding) == std::vector<std::string>{"(x)"});
  CHECK(vstrings(k.module.relations()) == std::vector<std::string>{"(x)"});

  const auto id = kernel_of_map(ModuleMap(m, m, {vec(r, {"1"})}));
  CHECK(id.module.rank() == 0);
  CHECK(id.module.is_zero());

  const auto zero = kernel_of_map(ModuleMap(m, m, {vec(r, {"0"})}));
  CHECK(zero.module == m);

  CHECK_THROWS_AS(ModuleMap(m, FPModule::free(r, 1), {vec(r, {"1"})}), Error);
}

TEST_CASE("subquotient") {
  const auto r = ring("Q", "x, y");
  const auto free1 = FPModule::free(r, 1);
  CHECK(len(subquotient({vec(r, {"1"})}, {vec(r, {"x"}), vec(r, {"y"})}, free1)) == 1);
  CHECK(subquotient({vec(r, {"x"}), vec(r, {"y"})}, {vec(r, {"x"}), vec(r, {"y"})}, free1).is_zero());
  const auto amb = FPModule::cyclic(r, polys(r, "x^2*y"));
  const auto sq = subquotient({vec(r, {"y"})}, {vec(r, {"y^2"})}, amb);
  CHECK(len(sq) == 2);
  CHECK(vstrings(sq.relations()) == std::vector<std::string>{"(y)", "(x^2)"});
  CHECK_THROWS_AS(subquotient({vec(r, {"x"})}, {vec(r, {"y"})}, free1), Error);
  CHECK(subquotient({}, {}, free1).rank() == 0);
}

TEST_CASE("length and dimension") {
  const auto r = ring("Q", "x, y");
  CHECK(len(FPModule::cyclic(r, polys(r, "x, y^2"))) == 2);
  CHECK(len(FPModule::cyclic(r, polys(r, "x"))) == -1);
  const FPModule kk(r, 2, {vec(r, {"x", "0"}), vec(r, {"0", "x"}), vec(r, {"y", "0"}), vec(r, {"0", "y"})});
  CHECK(len(kk) == 2);
  CHECK(module_dimension(kk) == 0);
  CHECK(module_dimension(FPModule::cyclic(r, polys(r, "x"))) == 1);
  CHECK(module_dimension(FPModule::free(r, 2)) == 2);
  CHECK(module_dimension(FPModule::zero(r)) == -1);
  CHECK(len(FPModule::zero(r)) == 0);
  CHECK(FPModule::zero(r).is_zero());
}

TEST_CASE("origin support for modules") {
  const auto r = ring("Q", "x, y");
  CHECK(supported_at_origin(FPModule::cyclic(r, polys(r, "x^2, y"))));
  CHECK_FALSE(supported_at_origin(FPModule::cyclic(r, polys(r, "x^2 - x, y"))));
  CHECK_THROWS_AS(supported_at_origin(FPModule::cyclic(r, polys(r, "x"))), Error);
}

TEST_CASE("gamma_saturation") {
  const auto r = ring("Q", "x, y");
  {
    const auto m = FPModule::cyclic(r, polys(r, "x^2*y"));
    const auto s = gamma_saturation(m, poly(r, "x"));
    CHECK(vstrings(s.gamma_embedding) == std::vector<std::string>{"(y)"});
    CHECK(vstrings(s.quotient.relations()) == std::vector<std::string>{"(y)"});
    CHECK(vstrings(s.gamma.relations()) == std::vector<std::string>{"(x^2)"});
  }
  {
    const auto m = FPModule::cyclic(r, polys(r, "x^2"));
    const auto s = gamma_saturation(m, poly(r, "y"));
    CHECK(s.gamma.rank() == 0);
    CHECK(s.quotient == m);
  }
  {
    const auto m = FPModule::cyclic(r, polys(r, "x, y^3"));
    const auto s = gamma_saturation(m, poly(r, "x"));
    CHECK(len(s.gamma) == len(m));
    CHECK(s.quotient.is_zero());
  }
}

TEST_CASE("pruned presentations") {
  const auto r = ring("Q", "x, y");
  const FPModule m(r, 3, {vec(r, {"1", "-x", "0"}), vec(r, {"0", "y", "x^2"}), vec(r, {"0", "0", "y^2"})});
  const auto p = m.pruned();
  CHECK(p.rank() < m.rank());
  CHECK(len(p) == len(m));
  CHECK(module_dimension(p) == module_dimension(m));
}

TEST_CASE("property: rank-nullity and length additivity on random maps") {
  const auto r = ring("F3", "x, y");
  std::mt19937_64 rng(99);
  const auto basis = oracle::monomial_polys(r, 2);
  auto random_entry = [&] {
    Polynomial f(r.base());
    for (const auto& m : basis)
      if (rng() % 3 == 0) f += m.scaled(Scalar::from_integer(r.field(), static_cast<long>(rng() % 3)));
    return f;
  };
  auto box = [&](std::size_t g) {
    std::vector<ModuleVector> rels;
    for (std::size_t j = 0; j < g; ++j) {
      rels.push_back(ModuleVector::embed(poly(r, "x^2"), g, j));
      rels.push_back(ModuleVector::embed(poly(r, "y^3"), g, j));
    }
    return rels;
  };
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t a = 1 + rng() % 2, b = 1 + rng() % 2;
    auto trels = box(b);
    if (rng() % 2) {
      std::vector<Polynomial> comps;
      for (std::size_t j = 0; j < b; ++j) comps.push_back(random_entry());
      trels.push_back(ModuleVector::from_components(r.base(), comps));
    }
    const FPModule source(r, a, box(a)), target(r, b, trels);
    std::vector<ModuleVector> cols;
    for (std::size_t i = 0; i < a; ++i) {
      std::vector<Polynomial> comps;
      for (std::size_t j = 0; j < b; ++j) comps.push_back(random_entry());
      cols.push_back(ModuleVector::from_components(r.base(), comps));
    }
    const ModuleMap phi(source, target, cols);
    const auto ker = kernel_of_map(phi);
    for (const auto& e : ker.embedding) CHECK(target.is_relation(phi.apply(e)));
    const auto image = subquotient(cols, {}, target);
    std::vector<ModuleVector> crels = target.relations();
    crels.insert(crels.end(), cols.begin(), cols.end());
    const FPModule coker(r, b, crels);
    CHECK(len(source) - len(ker.module) == len(image));
    CHECK(len(target) - len(image) == len(coker));
    // 0 -> ker -> source -> source/ker -> 0
    std::vector<ModuleVector> qrels = source.relations();
    qrels.insert(qrels.end(), ker.embedding.begin(), ker.embedding.end());
    CHECK(len(source) == len(ker.module) + len(FPModule(r, a, qrels)));
    CHECK(len(ker.module.pruned()) == len(ker.module));
  }
}

TEST_CASE("property: Schreyer syzygies agree with elimination") {
  const auto r = ring("Q", "x, y");
  std::mt19937_64 rng(5);
  const auto basis = oracle::monomial_polys(r, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rank = 1 + rng() % 2, count = 2 + rng() % 2;
    std::vector<ModuleVector> vs;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<Polynomial> comps;
      for (std::size_t j = 0; j < rank; ++j) {
        Polynomial f(r.base());
        for (const auto& m : basis)
          if (rng() % 3 == 0) f += m.scaled(Scalar::from_integer(r.field(), static_cast<long>(rng() % 5) - 2));
        comps.push_back(f);
      }
      vs.push_back(ModuleVector::from_components(r.base(), comps));
    }
    const auto s = syzygies(vs);
    for (const auto& c : s) CHECK(combine(r.base(), rank, c.components(), vs).is_zero());
    CHECK(oracle::same_submodule(s, oracle::syzygies_by_elimination(vs), r.base(), count));
  }
}
