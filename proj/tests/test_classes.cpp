#include "doctest.h"
#include "helpers.hpp"
#include "strata/classes.hpp"

using namespace strata;
using namespace testing_support;

TEST_CASE("verdict table for closed catalog entries") {
  for (const auto& name : catalog::list()) {
    const auto& e = catalog::get(name);
    if (!e.closed || e.complex.dimension() > 4) continue;
    for (const auto& [cls, expected] : e.verdicts) {
      const auto C = builtin(cls);
      for (const auto& FX : e.stratifications) {
        const auto v = links_in_class(FX, C);
        CHECK_MESSAGE(v.member == expected, name, " ", cls, " ", FX.name);
        if (!v.member) CHECK(!v.witnesses.empty());
      }
    }
  }
}

TEST_CASE("witnesses name the failing invariant") {
  const auto& ST2 = catalog::get("Sigma-T2").stratifications.front();
  const auto w = links_in_class(ST2, builtin("witt:Q"));
  REQUIRE_FALSE(w.member);
  CHECK(w.witnesses.front().value == "rank 2");
  const auto& SP2 = catalog::get("Sigma-RP2").stratifications.front();
  const auto e2 = links_in_class(SP2, builtin("euler2"));
  REQUIRE_FALSE(e2.member);
  CHECK(e2.witnesses.front().value.find('1') != std::string::npos);
  const auto& SP3 = catalog::get("Sigma-RP3").stratifications.front();
  const auto ip = links_in_class(SP3, builtin("ip"));
  REQUIRE_FALSE(ip.member);
  CHECK(ip.witnesses.front().value.find('2') != std::string::npos);
}

TEST_CASE("stratified and polyhedral routes agree on closed entries") {
  for (const auto& name : {"T2", "Sigma-T2", "Sigma-RP2", "Sigma-T3", "Sigma-RP3", "S1-pt"}) {
    const auto& K = catalog::get(name).complex;
    for (const auto& cls : {"witt:Q", "ip", "euler2", "loc-orient"}) {
      const auto E = builtin(cls);
      CHECK_MESSAGE(f_membership(K, E, Route::Stratified).member == f_membership(K, E, Route::Polyhedral).member,
                    name, " ", cls);
    }
  }
}

TEST_CASE("builtin names resolve and unknown names are refused") {
  for (const auto& n : builtin_names()) CHECK(builtin(n).kind == ClassKind::E);
  CHECK(builtin("g:witt:Q").kind == ClassKind::G);
  CHECK(builtin("siegel:ip").kind == ClassKind::Siegel);
  try {
    builtin("nope");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownName);
  }
  CHECK_THROWS_AS(builtin("witt:Z"), Error);
}

TEST_CASE("class constructors check kinds") {
  const auto E = builtin("witt:Q");
  const auto G = g_of_e(E);
  try {
    g_of_e(G);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::KindMismatch);
  }
  CHECK_THROWS_AS(e_of_g(E), Error);
  CHECK_THROWS_AS(siegel_class(G), Error);
}

TEST_CASE("literal suspensions are stripped") {
  const auto K = suspension_power(catalog::torus7(), 2);
  const auto [Z, pairs] = strip_literal_suspensions(K);
  CHECK(pairs == 2);
  CHECK(Z == catalog::torus7());
  const auto octahedron = suspension_power(SimplicialComplex::from_facets({{0}, {1}}), 2);
  const auto [W, k] = strip_literal_suspensions(octahedron);
  CHECK(k == 3);
  CHECK(W.is_empty());
  CHECK(strip_literal_suspensions(catalog::sphere(2)).second == 0);
}

TEST_CASE("desuspension cores decide G-membership") {
  const auto E = builtin("witt:Q");
  CHECK(g_of_e_membership(catalog::sphere(3), E).member);
  CHECK_FALSE(g_of_e_membership(suspension(catalog::torus7()).complex, E).member);
  CHECK(g_of_e_membership(suspension_power(catalog::rp2_6(), 2), E).member);
  const auto S = builtin("suspensions");
  CHECK(S.test(suspension(catalog::torus7()).complex).member);
  CHECK_FALSE(S.test(catalog::torus7()).member);
  CHECK_FALSE(g_of_e_membership(suspension(catalog::torus7()).complex, S).member);
}

TEST_CASE("Siegel membership implies G-membership on small links") {
  const std::vector<SimplicialComplex> links = {catalog::sphere(2), catalog::torus7(), catalog::rp2_6(),
                                                suspension(catalog::torus7()).complex,
                                                suspension(catalog::rp2_6()).complex};
  for (const auto& cls : {"witt:Q", "euler2", "loc-orient", "ip"}) {
    const auto E = builtin(cls);
    for (const auto& L : links)
      if (siegel_membership(L, E).member) CHECK(g_of_e_membership(L, E).member);
  }
}
