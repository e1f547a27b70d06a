#include "doctest.h"
#include "helpers.hpp"
#include "strata/json_io.hpp"

using namespace strata;
using namespace testing_support;

TEST_CASE("catalog entries are self-consistent") {
  const auto names = catalog::list();
  CHECK(names.size() == 18);
  for (const auto& name : names) {
    const auto& e = catalog::get(name);
    CHECK_MESSAGE(catalog::verify(e).empty(), name);
    CHECK(e.name == name);
    CHECK(!e.stratifications.empty());
    CHECK(e.closed == boundary_subcomplex(e.complex).is_empty());
  }
  CHECK_THROWS_AS(catalog::get("Klein"), Error);
}

TEST_CASE("catalog Euler characteristics match the face-count oracle") {
  for (const auto& name : catalog::list()) {
    const auto& e = catalog::get(name);
    CHECK_MESSAGE(oracle::euler(facets_of(e.complex)) == e.euler, name);
  }
}

TEST_CASE("the 11-vertex projective 3-space") {
  const auto K = catalog::rp3_11();
  CHECK(K.vertices().size() == 11);
  CHECK(K.facets().size() == 41);
  for (const auto& [r, d] : ridge_degrees(K)) CHECK(d == 2);
  CHECK(orient(K).orientable);
}

TEST_CASE("refinement adds exactly one point stratum") {
  const auto& I = catalog::get("Sigma-T2").stratifications.front();
  const auto R = catalog::refine_with_point(I);
  CHECK(R.skeleton(0).vertices().size() == I.skeleton(0).vertices().size() + 1);
  CHECK(coarsens(I, R));
}

TEST_CASE("complexes and filtrations round-trip through JSON") {
  for (const auto& name : {"T2", "Sigma-RP2", "I-T2", "S1-pt"}) {
    const auto& e = catalog::get(name);
    CHECK(io::complex_from_json(io::complex_to_json(e.complex, name)) == e.complex);
    for (const auto& FX : e.stratifications) {
      const auto back = io::filtered_from_json(io::filtered_to_json(FX));
      CHECK(back.same_filtration(FX));
      CHECK(back.classical == FX.classical);
      CHECK(back.orientation.has_value() == FX.orientation.has_value());
      if (FX.orientation) CHECK(*back.orientation == *FX.orientation);
    }
  }
}

TEST_CASE("certificates round-trip through JSON") {
  const auto B = bordism_to_intrinsic(catalog::get("T2").stratifications.back());
  const auto j = io::certificate_to_json(B);
  const auto back = io::certificate_from_json(j);
  CHECK(io::canonical(io::certificate_to_json(back)) == io::canonical(j));
  CHECK(verify_certificate(back).pass);
}

TEST_CASE("JSON errors and digests") {
  CHECK_THROWS_AS(io::parse_json("{"), Error);
  CHECK_THROWS_AS(io::complex_from_json(io::parse_json(R"({"facets": 3})")), Error);
  CHECK(io::digest("") == "cbf29ce484222325");
  CHECK(io::digest("a") == "af63dc4c8601ec8c");
  CHECK(io::canonical(io::parse_json(R"({"b":1,"a":[2,3]})")) == R"({"a":[2,3],"b":1})");
  const auto big = io::bigint_from_json(io::bigint_to_json(BigInt("123456789012345678901234567890")));
  CHECK(big == BigInt("123456789012345678901234567890"));
}
