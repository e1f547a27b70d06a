#include "doctest.h"
#include "helpers.hpp"
#include "strata/bordism.hpp"
#include "strata/classes.hpp"

using namespace strata;
using namespace testing_support;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantBreach;
}

/// Equal up to trailing zero groups.
bool same_homology(std::vector<HomologyGroup> a, std::vector<HomologyGroup> b) {
  auto trim = [](std::vector<HomologyGroup>& h) {
    while (!h.empty() && h.back().rank == 0 && h.back().torsion.empty()) h.pop_back();
  };
  trim(a);
  trim(b);
  return a == b;
}

const FilteredComplex& strat(const std::string& name, std::size_t k) {
  return catalog::get(name).stratifications.at(k);
}

}  // namespace

TEST_CASE("cylinders are certified bordisms from a space to itself") {
  for (const auto& name : {"T2", "RP2", "Sigma-T2"}) {
    const auto C = cylinder(strat(name, 1));
    CHECK_MESSAGE(verify_certificate(C).pass, name);
    CHECK(C.pieces.size() == 2);
    CHECK(C.piece("top").sign == -C.piece("bottom").sign);
    CHECK(same_homology(homology(C.Y.complex, Ring::integers()), homology(strat(name, 1).complex, Ring::integers())));
  }
}

TEST_CASE("gluing two cylinders end to end") {
  const auto C = cylinder(strat("Sigma-T2", 1));
  const auto G = glue(C, "top", C, "bottom");
  const auto check = verify_certificate(G);
  CHECK(check.pass);
  CHECK(G.pieces.size() == 2);
  CHECK(same_homology(homology(G.Y.complex, Ring::integers()), homology(C.Y.complex, Ring::integers())));
}

TEST_CASE("gluing errors") {
  const auto C = cylinder(strat("T2", 0));
  CHECK(kind_of([&] { glue(C, "top", C, "top"); }) == ErrorKind::SignClash);
  auto bare = C;
  bare.collars.clear();
  CHECK(kind_of([&] { glue(bare, "top", C, "bottom"); }) == ErrorKind::CollarMissing);
  const auto D = cylinder(strat("S2", 0));
  CHECK(kind_of([&] { glue(C, "top", D, "bottom"); }) == ErrorKind::NoIsomorphism);
  CHECK(kind_of([&] { glue(C, "side", C, "bottom"); }) == ErrorKind::UnknownName);
}

TEST_CASE("bordism from a space to its intrinsic stratification") {
  for (const auto& name : {"T2", "Sigma-T2", "Sigma-RP2"}) {
    const auto& X = strat(name, 1);
    const auto B = bordism_to_intrinsic(X);
    CHECK_MESSAGE(verify_certificate(B).pass, name);
    REQUIRE(B.pieces.size() == 2);
    CHECK(B.pieces[0].sign == -B.pieces[1].sign);
    CHECK(B.pieces[0].piece.same_filtration(X));
    CHECK(B.pieces[1].piece.same_filtration(intrinsic_stratification(X.complex)));
    CHECK(same_homology(homology(B.Y.complex, Ring::integers()), homology(X.complex, Ring::integers())));
    CHECK(validate(B.Y, Mode::WithBoundary).pass);
  }
}

TEST_CASE("Euler characteristic of the boundary of an Euler bordism is even") {
  for (const auto& name : {"Sigma-T2", "T2", "Sigma-RP3"}) {
    const auto B = bordism_to_intrinsic(strat(name, 1));
    if (!links_in_class(B.Y, builtin("euler2")).member) continue;
    CHECK(euler_characteristic_faces(boundary_subcomplex(B.Y.complex)) % 2 == 0);
  }
}

TEST_CASE("bordisms between two stratifications") {
  const auto B = bordism_between(strat("Sigma-T2", 0), strat("Sigma-T2", 1));
  CHECK(verify_certificate(B).pass);
  CHECK(kind_of([&] { bordism_between(strat("T2", 0), strat("S2", 0)); }) == ErrorKind::DifferentCarrier);
  auto flipped = strat("Sigma-T2", 1);
  flipped.orientation = orient(flipped.complex).orientation.reversed();
  auto straight = strat("Sigma-T2", 0);
  straight.orientation = orient(straight.complex).orientation;
  CHECK(kind_of([&] { bordism_between(straight, flipped); }) == ErrorKind::IncompatibleOrientations);
}

TEST_CASE("restratifying the ends of a bordism") {
  const auto& I = strat("T2", 0);
  const auto& R = strat("T2", 1);
  const auto Y = restratify_bordism(cylinder(I), R, R);
  CHECK(verify_certificate(Y).pass);
  CHECK(Y.pieces.size() == 2);
  CHECK(kind_of([&] { restratify_bordism(cylinder(I), strat("S2", 0), R); }) == ErrorKind::DifferentCarrier);
}

TEST_CASE("reversal flips the piece signs") {
  const auto B = bordism_to_intrinsic(strat("T2", 1));
  const auto R = B.reversed();
  CHECK(verify_certificate(R).pass);
  for (std::size_t i = 0; i < B.pieces.size(); ++i) CHECK(R.pieces[i].sign == -B.pieces[i].sign);
}

TEST_CASE("corrupted certificates are rejected") {
  const auto B = bordism_to_intrinsic(strat("T2", 1));
  {
    auto M = B;
    auto& iso = M.pieces[0].iso;
    std::swap(iso.begin()->second, std::next(iso.begin())->second);
    CHECK_FALSE(verify_certificate(M).pass);
  }
  {
    auto M = B;
    M.pieces[1].sign = M.pieces[0].sign;
    CHECK_FALSE(verify_certificate(M).pass);
  }
  {
    auto M = B;
    M.pieces.pop_back();
    CHECK_FALSE(verify_certificate(M).pass);
  }
  {
    auto M = B;
    M.collars.front().map.begin()->second = 100000;
    CHECK_FALSE(verify_certificate(M).pass);
  }
  {
    auto M = B;
    M.pieces[0].piece = strat("T2", 0);
    CHECK_FALSE(verify_certificate(M).pass);
  }
}

TEST_CASE("the corner unfolding verifies and detects tampering") {
  const auto c = corner_unfolding();
  CHECK(verify_corner(c));
  const auto T = catalog::torus7();
  CHECK(verify_corner(c, &T));
  auto bad = c;
  bad.target[bad.target_boundary.front()][1] = 0.5;
  CHECK_FALSE(verify_corner(bad));
  auto folded = c;
  folded.target[6][0] += 100;
  CHECK_FALSE(verify_corner(folded));
}

TEST_CASE("half-intrinsic suspension of the circle with a marked point") {
  const auto& e = catalog::get("S1-pt");
  const FilteredComplex* X = nullptr;
  for (const auto& FX : e.stratifications)
    if (!FX.skeleton(0).is_empty()) X = &FX;
  REQUIRE(X != nullptr);
  const auto S = half_intrinsic_suspension(*X);
  CHECK(validate(S, Mode::Closed).pass);
  int c0 = 0, c1 = 0, c2 = 0;
  for (const auto& s : strata_of(S)) {
    c0 += s.dim == 0;
    c1 += s.dim == 1;
    c2 += s.dim == 2;
  }
  CHECK(c0 == 2);
  CHECK(c1 == 1);
  CHECK(c2 == 1);
}

TEST_CASE("half-intrinsic suspensions of closed catalog spaces validate") {
  for (const auto& name : {"T2", "RP2", "Sigma-T2", "T3"}) {
    for (const auto& FX : catalog::get(name).stratifications)
      CHECK_MESSAGE(validate(half_intrinsic_suspension(FX), Mode::Closed).pass, name);
  }
}
