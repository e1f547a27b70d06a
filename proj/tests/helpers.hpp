#pragma once

#include <map>

#include "oracles.hpp"
#include "strata/catalog.hpp"

namespace testing_support {

inline oracle::Facets facets_of(const strata::SimplicialComplex& K) {
  return oracle::Facets(K.facets().begin(), K.facets().end());
}

inline std::map<oracle::Face, int> levels_of(const strata::FilteredComplex& FX) {
  std::map<oracle::Face, int> out;
  const auto lv = FX.level_table();
  const auto& F = FX.complex.faces();
  for (int id = 0; id < F.total; ++id) out[F.by_global(id)] = lv[id];
  return out;
}

inline strata::SimplicialComplex interval() { return strata::SimplicialComplex::from_facets({{0, 1}}); }

/// Suspension with both poles as 0-strata, whatever their links.
inline strata::FilteredComplex poles_filtered(const strata::SimplicialComplex& X) {
  const auto S = strata::suspension(X);
  std::vector<int> lv(S.complex.faces().total, S.complex.dimension());
  lv[S.complex.faces().global_id({S.north})] = 0;
  lv[S.complex.faces().global_id({S.south})] = 0;
  return strata::FilteredComplex::from_levels(S.complex, lv, "poles");
}

inline std::vector<std::size_t> ranks(const std::vector<strata::HomologyGroup>& h) {
  std::vector<std::size_t> r;
  for (const auto& g : h) r.push_back(g.rank);
  return r;
}

}  // namespace testing_support
