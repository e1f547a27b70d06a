#include "doctest.h"
#include "helpers.hpp"
#include "strata/ih.hpp"

using namespace strata;
using namespace testing_support;

namespace {

std::vector<std::size_t> ih_ranks(const FilteredComplex& FX, const std::string& p, const Ring& R = Ring::rationals()) {
  return ranks(intersection_homology(FX, parse_perversity(p, FX.dim()), R));
}

}  // namespace

TEST_CASE("perversities") {
  const auto m = lower_middle(4), n = upper_middle(4);
  CHECK(m.at(2) == 0);
  CHECK(m.at(3) == 0);
  CHECK(m.at(4) == 1);
  CHECK(n.at(3) == 1);
  CHECK(m <= n);
  CHECK(zero_perversity(4) <= m);
  CHECK(n <= top_perversity(4));
  CHECK(m.is_gm());
  CHECK_FALSE(parse_perversity("0,2", 3).is_gm());
  CHECK(parse_perversity("0,1", 3).values == upper_middle(3).values);
  CHECK_THROWS_AS(parse_perversity("0,x", 3), Error);
  CHECK_THROWS_AS(m.at(5), Error);
}

TEST_CASE("golden intersection homology of suspensions") {
  const auto& ST2 = catalog::get("Sigma-T2").stratifications.front();
  CHECK(ih_ranks(ST2, "m") == std::vector<std::size_t>{1, 2, 0, 1});
  CHECK(ih_ranks(ST2, "n") == std::vector<std::size_t>{1, 0, 2, 1});
  const auto& ST3 = catalog::get("Sigma-T3").stratifications.front();
  CHECK(ih_ranks(ST3, "m") == std::vector<std::size_t>{1, 3, 0, 3, 1});
  const auto& P = catalog::get("S1xSigma-T2").stratifications.front();
  CHECK(ih_ranks(P, "m") == std::vector<std::size_t>{1, 3, 2, 1, 1});
}

TEST_CASE("intersection homology of a manifold is ordinary homology") {
  for (const auto& K : {catalog::torus7(), catalog::rp2_6(), catalog::rp3_11(), catalog::sphere(3)}) {
    const auto FX = FilteredComplex::trivial(K);
    for (const auto& R : {Ring::integers(), Ring::rationals(), Ring::prime_field(2)})
      CHECK(intersection_homology(FX, lower_middle(K.dimension()), R) == homology(K, R));
  }
}

TEST_CASE("intersection homology does not depend on the stratification") {
  for (const auto& name : {"T2", "RP2", "Sigma-T2", "Sigma-RP2", "Sigma-RP3", "S1-pt"}) {
    const auto& e = catalog::get(name);
    const auto n = e.complex.dimension();
    if (n < 2) continue;
    const auto base = intersection_homology(e.stratifications.front(), lower_middle(n), Ring::integers());
    for (const auto& FX : e.stratifications)
      CHECK_MESSAGE(intersection_homology(FX, lower_middle(n), Ring::integers()) == base, name);
  }
}

TEST_CASE("intersection Betti numbers match the allowable-chain oracle") {
  for (const auto& name : {"Sigma-T2", "Sigma-RP2", "T2"}) {
    for (const auto& FX0 : catalog::get(name).stratifications) {
      const auto FX = make_full(FX0);
      if (FX.complex.faces().total > 400) continue;
      const int n = FX.dim();
      for (const auto& P : {lower_middle(n), upper_middle(n), zero_perversity(n), top_perversity(n)}) {
        std::vector<int> pv(n + 1, 0);
        for (int k = 2; k <= n; ++k) pv[k] = P.at(k);
        const auto fs = facets_of(FX.complex);
        const auto lv = levels_of(FX);
        CHECK_MESSAGE(ranks(intersection_homology(FX, P, Ring::rationals())) ==
                          oracle::intersection_betti(fs, lv, pv, oracle::kBigPrime),
                      name, " ", P.name);
        CHECK(ranks(intersection_homology(FX, P, Ring::prime_field(2))) == oracle::intersection_betti(fs, lv, pv, 2));
      }
    }
  }
}

TEST_CASE("middle intersection homology of an even-dimensional suspension vanishes") {
  const auto FX = poles_filtered(catalog::circle(4));
  CHECK(validate(FX, Mode::Closed).pass);
  CHECK(ih_ranks(FX, "m")[1] == 0);
}

TEST_CASE("torsion in the intersection homology of the suspended projective plane") {
  const auto& FX = catalog::get("Sigma-RP2").stratifications.front();
  const auto h = intersection_homology(FX, lower_middle(3), Ring::integers());
  CHECK(h[1].rank == 0);
  CHECK(h[1].torsion == std::vector<BigInt>{2});
  CHECK(ih_torsion(FX, lower_middle(3), 1) == std::vector<BigInt>{2});
  CHECK_THROWS_AS(ih_torsion(FX, lower_middle(3), 7), Error);
}

TEST_CASE("allowability of the regular part") {
  const auto& FX = catalog::get("Sigma-T2").stratifications.front();
  const auto A = allowability(FX, lower_middle(3));
  const auto& F = FX.complex.faces();
  const auto S = suspension(catalog::torus7());
  CHECK_FALSE(A.allowable[F.global_id({S.north})]);
  CHECK(A.allowable[F.global_id({0})]);
  CHECK(A.allowable[F.global_id({0, 1})]);
}

TEST_CASE("invalid perversities and filtrations are refused") {
  const auto& FX = catalog::get("Sigma-T2").stratifications.front();
  CHECK_THROWS_AS(intersection_homology(FX, parse_perversity("0,2", 3), Ring::rationals()), Error);
  auto NC = FX;
  NC.classical = false;
  try {
    intersection_homology(NC, lower_middle(3), Ring::rationals());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotValidated);
  }
  try {
    intersection_homology(FX, parse_perversity("0,2", 3), Ring::rationals());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PerversityViolation);
  }
}

TEST_CASE("serial and parallel intersection homology agree") {
  const auto& FX = catalog::get("Sigma-RP3").stratifications.back();
  CHECK(intersection_homology(FX, lower_middle(4), Ring::integers(), Exec::Serial) ==
        intersection_homology(FX, lower_middle(4), Ring::integers(), Exec::Parallel));
}
