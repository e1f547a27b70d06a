#include "doctest.h"
#include "helpers.hpp"
#include "mutations.hpp"
#include "strata/strat.hpp"

using namespace strata;
using namespace testing_support;

namespace {

int count_dim(const std::vector<Stratum>& S, int d) {
  int c = 0;
  for (const auto& s : S) c += s.dim == d;
  return c;
}

}  // namespace

TEST_CASE("every shipped stratification validates") {
  for (const auto& name : catalog::list()) {
    const auto& e = catalog::get(name);
    const Mode mode = e.closed ? Mode::Closed : Mode::WithBoundary;
    for (const auto& FX : e.stratifications) {
      if (e.complex.faces().total > 4000) continue;
      const auto R = validate(FX, mode);
      CHECK_MESSAGE(R.pass, name, " ", FX.name);
    }
  }
}

TEST_CASE("each mutation is rejected by the expected clause") {
  for (const auto& m : validator_mutations()) {
    const auto R = validate(m.space, m.mode);
    REQUIRE_MESSAGE(!R.pass, m.name);
    CHECK_MESSAGE(R.first_failure()->clause == m.clause, m.name, ": ", R.first_failure()->detail);
  }
}

TEST_CASE("malformed skeleta are reported as errors") {
  auto FX = FilteredComplex::trivial(catalog::torus7());
  FX.skeleta.pop_back();
  CHECK_THROWS_AS(validate(FX, Mode::Closed), Error);
  auto FY = FilteredComplex::trivial(catalog::torus7());
  FY.skeleta[0] = SimplicialComplex::from_facets({{99}});
  CHECK_THROWS_AS(validate(FY, Mode::Closed), Error);
}

TEST_CASE("a wedge of spheres fails the manifold clause") {
  const auto S2 = catalog::sphere(2);
  auto fs = S2.facets();
  for (const auto& f : S2.facets()) {
    Simplex g;
    for (Vertex v : f) g.push_back(v == 0 ? 0 : v + 10);
    fs.push_back(g);
  }
  const auto R = validate(FilteredComplex::trivial(SimplicialComplex::from_facets(fs)), Mode::Closed);
  REQUIRE_FALSE(R.pass);
  CHECK(R.first_failure()->clause == "e");
}

TEST_CASE("a closed check of a space with boundary fails at the boundary links") {
  const auto R = validate(catalog::get("I-T2").stratifications.front(), Mode::Closed);
  REQUIRE_FALSE(R.pass);
  CHECK(R.first_failure()->clause == "e");
  CHECK(R.first_failure()->detail.find("sphere") != std::string::npos);
}

TEST_CASE("intrinsic stratification of the suspended torus is the two poles") {
  const auto S = suspension(catalog::torus7());
  const auto FX = intrinsic_stratification(S.complex);
  CHECK(FX.skeleton(0) == SimplicialComplex::from_facets({{S.north}, {S.south}}));
  CHECK(FX.skeleton(2) == FX.skeleton(0));
  const auto st = strata_of(FX);
  CHECK(count_dim(st, 0) == 2);
  CHECK(count_dim(st, 3) == 1);
}

TEST_CASE("intrinsic stratifications of manifolds are trivial") {
  for (const auto& K : {catalog::torus7(), catalog::rp2_6(), catalog::sphere(3), catalog::rp3_11()}) {
    const auto FX = intrinsic_stratification(K);
    CHECK(FX.skeleton(K.dimension() - 1).is_empty());
  }
}

TEST_CASE("intrinsic stratification coarsens every shipped stratification") {
  for (const auto& name : catalog::list()) {
    const auto& e = catalog::get(name);
    if (!e.closed || e.complex.faces().total > 4000) continue;
    const auto I = intrinsic_stratification(e.complex);
    for (const auto& FX : e.stratifications) CHECK_MESSAGE(coarsens(I, FX), name);
  }
  CHECK_THROWS_AS(coarsens(FilteredComplex::trivial(catalog::torus7()), FilteredComplex::trivial(catalog::rp2_6())),
                  Error);
}

TEST_CASE("polyhedral links desuspend according to the stratum dimension") {
  const auto& FX = catalog::get("Sigma-T2").stratifications.front();
  const auto S = suspension(catalog::torus7());
  const auto pole = polyhedral_link_decomposition(FX, {S.north});
  CHECK(pole.j == 0);
  CHECK(isomorphic(pole.core, catalog::torus7()).has_value());
  const auto reg = polyhedral_link_decomposition(FX, {0, S.north});
  CHECK(reg.j == 3);
  CHECK(reg.core.is_empty());
}

TEST_CASE("sphere and ball recognition") {
  CHECK(recognize_sphere(catalog::sphere(3), 3) == Recognition::Yes);
  CHECK(recognize_sphere(catalog::torus7(), 2) == Recognition::No);
  CHECK(recognize_sphere(catalog::rp3_11(), 3) == Recognition::No);
  CHECK(recognize_sphere(SimplicialComplex::empty(-1), -1) == Recognition::Yes);
  CHECK(recognize_ball(cone(catalog::sphere(2)).complex, 3) == Recognition::Yes);
  CHECK(recognize_ball(cone(catalog::torus7()).complex, 3) == Recognition::No);
  CHECK(recognize_ball(catalog::sphere(2), 2) == Recognition::No);
}

TEST_CASE("strata of a refined torus and their links") {
  const auto& e = catalog::get("T2");
  REQUIRE(e.stratifications.size() == 2);
  const auto& FX = e.stratifications[1];
  const auto st = strata_of(FX);
  CHECK(count_dim(st, 0) == 1);
  CHECK(count_dim(st, 2) == 1);
  for (const auto& s : st) {
    const auto L = stratum_link(FX, s);
    if (!s.regular) CHECK(isomorphic(L.complex, catalog::circle(6)).has_value());
  }
}

TEST_CASE("subdivision of a filtered complex is full and still validates") {
  const auto& FX = catalog::get("Sigma-T2").stratifications.back();
  const auto sd = subdivide(FX);
  CHECK(is_full(sd));
  CHECK(validate(sd, Mode::Closed).pass);
}

TEST_CASE("filtrations from levels and generators agree") {
  const auto K = catalog::torus7();
  const auto A = with_levels(K, {{{3}, 0}});
  const auto B = FilteredComplex::from_generators(K, {{0, {{3}}}});
  CHECK(A.same_filtration(B));
  CHECK(A.level({3}) == 0);
  CHECK(A.level({3, 4}) == 2);
}

TEST_CASE("serial and parallel validation agree") {
  for (const auto& name : {"Sigma-T2", "S1xSigma-T2", "I-T2"}) {
    const auto& e = catalog::get(name);
    const Mode mode = e.closed ? Mode::Closed : Mode::WithBoundary;
    const auto a = validate(e.stratifications.back(), mode, Exec::Serial);
    const auto b = validate(e.stratifications.back(), mode, Exec::Parallel);
    CHECK(a.pass == b.pass);
    CHECK(a.clauses.size() == b.clauses.size());
    for (std::size_t i = 0; i < a.clauses.size(); ++i) CHECK(a.clauses[i].detail == b.clauses[i].detail);
  }
}

TEST_CASE("intrinsic data agrees between serial and parallel runs") {
  const auto K = catalog::get("S1xSigma-T2").complex;
  const auto a = intrinsic_data(K, Exec::Serial);
  const auto b = intrinsic_data(K, Exec::Parallel);
  CHECK(a.J == b.J);
  CHECK(a.core == b.core);
}

TEST_CASE("product of a circle with the suspended torus has circle strata") {
  const auto& FX = catalog::get("S1xSigma-T2").stratifications.front();
  const auto st = strata_of(FX);
  CHECK(count_dim(st, 1) == 2);
  CHECK(count_dim(st, 0) == 0);
  for (const auto& s : st)
    if (!s.regular) CHECK(isomorphic(stratum_link(FX, s).complex, catalog::torus7()).has_value());
}
