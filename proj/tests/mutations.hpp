#pragma once

#include <string>
#include <vector>

#include "strata/catalog.hpp"

namespace testing_support {

struct Mutation {
  std::string name;
  strata::FilteredComplex space;
  strata::Mode mode = strata::Mode::Closed;
  /// Clause expected to be the first failure.
  std::string clause;
};

inline strata::FilteredComplex with_levels(const strata::SimplicialComplex& K,
                                           const std::vector<std::pair<strata::Simplex, int>>& lowered,
                                           bool classical = true) {
  std::vector<int> lv(K.faces().total, K.dimension());
  for (const auto& [s, l] : lowered)
    for (const auto& f : strata::all_faces(s)) {
      const int id = K.faces().global_id(f);
      lv[id] = std::min(lv[id], l);
    }
  auto FX = strata::FilteredComplex::from_levels(K, lv);
  FX.classical = classical;
  return FX;
}

inline std::vector<Mutation> validator_mutations() {
  using namespace strata;
  namespace cat = strata::catalog;
  std::vector<Mutation> out;
  const auto T = cat::torus7();
  {
    auto FX = with_levels(T, {{{0}, 0}});
    FX.skeleta[1] = SimplicialComplex::empty(1);
    out.push_back({"torus: point stratum missing from X^1", FX, Mode::Closed, "a"});
  }
  {
    auto FX = FilteredComplex::trivial(T);
    FX.skeleta[1] = T;
    out.push_back({"torus: X^1 is two-dimensional", FX, Mode::Closed, "a"});
  }
  {
    const auto& E = cat::get("Sigma-T2");
    auto FX = E.stratifications.front();
    FX.skeleta[1] = SimplicialComplex::from_facets({FX.skeleta[0].facets().front()});
    out.push_back({"suspended torus: one pole dropped from X^1", FX, Mode::Closed, "a"});
  }
  {
    auto fs = T.facets();
    fs.push_back({0, 100});
    out.push_back({"torus with a dangling edge", FilteredComplex::trivial(SimplicialComplex::from_facets(fs)),
                   Mode::Closed, "b"});
  }
  {
    auto fs = cat::sphere(2).facets();
    fs.push_back({0, 10});
    fs.push_back({10, 11});
    out.push_back({"sphere with a whisker", FilteredComplex::trivial(SimplicialComplex::from_facets(fs)),
                   Mode::Closed, "b"});
  }
  out.push_back({"torus: edge stratum of codimension one", with_levels(T, {{{0, 1}, 1}}), Mode::Closed, "d"});
  {
    const auto S = suspension(cat::torus7());
    out.push_back({"suspended torus: triangle stratum of codimension one",
                   with_levels(S.complex, {{{S.north}, 0}, {{S.south}, 0}, {{0, 1, S.north}, 2}}), Mode::Closed,
                   "d"});
  }
  {
    const auto P = cat::rp2_6();
    std::vector<std::pair<Simplex, int>> loop;
    for (const auto& e : P.faces().by_dim[1])
      if (e[0] == 0) loop.push_back({e, 1});
    out.push_back({"projective plane: star of a vertex in a 1-stratum", with_levels(P, loop), Mode::Closed, "d"});
  }
  {
    const auto& E = cat::get("I-T2");
    auto FX = E.stratifications.front();
    const auto B = boundary_subcomplex(E.complex);
    FX.boundary = connected_components(B).front();
    out.push_back({"interval times torus: one boundary end forgotten", FX, Mode::WithBoundary, "g"});
  }
  {
    const auto& E = cat::get("I-Sigma-T2");
    auto FX = E.stratifications.front();
    FX.boundary = SimplicialComplex::empty(E.complex.dimension() - 1);
    out.push_back({"interval times suspended torus: boundary declared empty", FX, Mode::WithBoundary, "g"});
  }
  return out;
}

}  // namespace testing_support
