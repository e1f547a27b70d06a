#pragma once

#include <map>
#include <string>
#include <vector>

#include "strata/algebra.hpp"
#include "strata/strat.hpp"

namespace strata::catalog {

struct CatalogEntry {
  std::string name;
  std::string description;
  SimplicialComplex complex;
  bool closed = true;
  int euler = 0;
  /// Integral homology in degrees 0..dim.
  std::vector<HomologyGroup> homology;
  bool orientable = true;
  /// First entry is the intrinsic stratification; later ones refine it.
  std::vector<FilteredComplex> stratifications;
  /// Expected membership by builtin class: links_in_class when closed, otherwise f_membership.
  std::map<std::string, bool> verdicts;
};

/// Entry with χ, homology, orientability and every stratification re-derived on first access.
const CatalogEntry& get(const std::string& name);
std::vector<std::string> list();
/// Mismatches between stored and recomputed invariants; empty when the entry is consistent.
std::vector<std::string> verify(const CatalogEntry& e);

SimplicialComplex sphere(int n);
SimplicialComplex circle(int m);
SimplicialComplex torus7();
SimplicialComplex rp2_6();
SimplicialComplex rp3_11();
SimplicialComplex torus3();

/// FX with one extra 0-stratum at the least regular interior vertex.
FilteredComplex refine_with_point(const FilteredComplex& FX);

}  // namespace strata::catalog
