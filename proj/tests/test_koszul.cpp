#include "doctest.h"
#include "mcalc/error.hpp"
#include "mcalc/koszul.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mcalc;
using namespace mcalc::testing;

namespace {

long len(const FPModule& m) {
  const auto l = length(m);
  return l ? static_cast<long>(*l) : -1;
}

std::vector<long long> lengths(const std::string& field, const std::string& quotient, const std::string& seq,
                               const std::string& vars = "x, y") {
  const auto r = ring(field, vars, quotient);
  return koszul_lengths(polys(r, seq), FPModule::free(r, 1));
}

}  // namespace

TEST_CASE("complex shape and signs") {
  const auto r = ring("Q", "x, y");
  const KoszulComplex k(polys(r, "x, y"), FPModule::free(r, 1));
  CHECK(k.term(0).rank() == 1);
  CHECK(k.term(1).rank() == 2);
  CHECK(k.term(2).rank() == 1);
  CHECK(k.columns(1)[0].to_string() == "(x)");
  CHECK(k.columns(1)[1].to_string() == "(y)");
  CHECK(k.columns(2)[0].to_string() == "(-y, x)");

  const KoszulComplex one(polys(r, "x"), FPModule::free(r, 1));
  CHECK(one.columns(1)[0].to_string() == "(x)");

  const KoszulComplex with_zero(polys(r, "0, y"), FPModule::free(r, 1));
  CHECK(with_zero.columns(1)[0].is_zero());

  const KoszulComplex three(polys(r, "x, y, x + y"), FPModule::free(r, 2));
  CHECK(three.term(1).rank() == 6);
  CHECK(three.term(2).rank() == 6);
  CHECK(three.term(3).rank() == 2);

  const auto other = ring("Q", "x, y, z");
  CHECK_THROWS_AS(KoszulComplex(polys(other, "x"), FPModule::free(r, 1)), Error);
}

TEST_CASE("homology of standard examples") {
  CHECK(lengths("Q", "[]", "x, y") == std::vector<long long>{1, 0, 0});
  CHECK(lengths("F2", "[x^2 + x*y + y^2]", "x, y") == std::vector<long long>{1, 1, 0});
  CHECK(lengths("Q", "[y^2]", "x") == std::vector<long long>{2, 0});

  const auto r = ring("Q", "x, y");
  const auto m = FPModule::cyclic(r, polys(r, "x"));
  const auto hs = koszul_homologies(polys(r, "x"), m);
  CHECK(hs[0] == m);
  CHECK(hs[1] == m);
  CHECK_THROWS_AS(koszul_lengths(polys(r, "x"), m), Error);
  CHECK(koszul_lengths(polys(r, "x, y"), m) == std::vector<long long>{1, 1, 0});
}

TEST_CASE("empty sequence gives M") {
  const auto r = ring("Q", "x, y");
  const auto m = FPModule::cyclic(r, polys(r, "x^2, y"));
  CHECK(koszul_homology({}, m, 0) == m);
  CHECK(koszul_lengths({}, m) == std::vector<long long>{2});
}

TEST_CASE("top and bottom homology agree with direct computations") {
  const auto r = ring("Q", "x, y, z");
  for (const std::string rel : {"x*y, x*z", "x^2, y^2", "x*y*z", "x^2*y, z^2"}) {
    for (const std::string seq : {"x, y", "y, z", "x + z, y", "x, y, z"}) {
      const auto m = FPModule::cyclic(r, polys(r, rel));
      const auto x = polys(r, seq);
      const auto h0 = koszul_homology(x, m, 0);
      CHECK(len(h0) == len(quotient_by_ideal(m, x)));
      // {m : x_j m = 0 for all j} as the kernel of m -> (x_1 m, .., x_n m).
      ModuleVector col(r.base(), x.size());
      for (std::size_t j = 0; j < x.size(); ++j) col += ModuleVector::embed(x[j], x.size(), j);
      const FPModule target(r, x.size(), [&] {
        std::vector<ModuleVector> rels;
        for (std::size_t j = 0; j < x.size(); ++j)
          for (const auto& rr : m.relations()) rels.push_back(rr.shifted(j, x.size()));
        return rels;
      }());
      const auto top = kernel_of_map(ModuleMap(m, target, {col}));
      CHECK(len(koszul_homology(x, m, x.size())) == len(top.module));
    }
  }
}

TEST_CASE("phi_apply and length evaluation") {
  const auto r = ring("Q", "x, y");
  const auto v = phi_apply(polys(r, "x"), VirtualModule::of(FPModule::free(r, 1)));
  REQUIRE(v.terms().size() == 1);
  CHECK(v.terms()[0].coefficient == 1);
  CHECK(v.terms()[0].module == FPModule::cyclic(r, polys(r, "x")));

  const auto killed = FPModule::cyclic(r, polys(r, "x, y^3"));
  CHECK(length_evaluation(phi_apply(polys(r, "x"), VirtualModule::of(killed))) == 0);

  const auto a = ring("F2", "x, y", "[x^2 + x*y + y^2]");
  CHECK(length_evaluation(phi_apply(polys(a, "x"), VirtualModule::of(FPModule::free(a, 1)))) == 2);

  const auto id = phi_apply({}, VirtualModule::of(killed));
  CHECK(length_evaluation(id) == 3);
  CHECK_THROWS_AS(length_evaluation(VirtualModule::of(FPModule::free(r, 1))), Error);
}

TEST_CASE("reduce_class") {
  const auto r = ring("Q", "x, y");
  CHECK(reduce_class(polys(r, "x"), FPModule::free(r, 1)) == FPModule::cyclic(r, polys(r, "x")));
  CHECK(len(reduce_class(polys(r, "x + y"), FPModule::cyclic(r, polys(r, "x*y")))) == 2);
  const auto n = reduce_class(polys(r, "y"), FPModule::cyclic(r, polys(r, "x^2")));
  CHECK(n == FPModule::cyclic(r, polys(r, "x^2, y")));
  CHECK(len(n) == 2);
  CHECK_THROWS_AS(reduce_class(polys(r, "x"), FPModule::cyclic(r, polys(r, "x^2"))), Error);

  // Torsion is removed before cutting: M = R/(x*y^2, y^3), x = (x).
  const auto m = FPModule::cyclic(r, polys(r, "x*y^2, y^3"));
  const auto cut = reduce_class(polys(r, "x"), m);
  CHECK(module_dimension(cut) == 0);
  CHECK(len(cut) == length_evaluation(phi_apply(polys(r, "x"), VirtualModule::of(m))));
}

TEST_CASE("property: vanishing when a power of x_i kills M") {
  const auto r = ring("Q", "x, y, z");
  for (const std::string rel : {"x", "x^2, y*z", "x^3, y^2", "x^2, x*y"}) {
    const auto m = FPModule::cyclic(r, polys(r, rel));
    for (const std::string seq : {"x, y, z", "x, y + z, z", "y, x, z"}) {
      CHECK(alternating_length(koszul_lengths(polys(r, seq), m)) == 0);
    }
  }
}
