#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "strata/ih.hpp"
#include "strata/strat.hpp"

namespace strata {

enum class ClassKind { E, G, Siegel };

struct Witness {
  /// Where the failing space came from, e.g. "stratum 0 at [7]" or "face [0,3]".
  std::string location;
  std::string condition;
  std::string value;
  SimplicialComplex link;
};

struct ClassVerdict {
  bool member = true;
  bool heuristic = false;
  std::vector<Witness> witnesses;
  std::vector<ClauseResult> clauses;
};

struct SingularityClass {
  std::string name;
  ClassKind kind = ClassKind::E;
  /// Membership of a closed classical pseudomanifold.
  std::function<ClassVerdict(const SimplicialComplex&)> test;
  bool contains_s1 = true;
  bool suspension_closed = true;
  bool desuspension_closed = false;
};

/// witt:Q, witt:F<p>, ip, euler2, loc-orient, loc-orient-witt:<field>, s-duality, lsf-partial, all, suspensions;
/// prefixes g: and siegel: apply g_of_e and the Siegel construction.
SingularityClass builtin(const std::string& name);
std::vector<std::string> builtin_names();

SingularityClass g_of_e(const SingularityClass& E);
SingularityClass e_of_g(const SingularityClass& G);
SingularityClass siegel_class(const SingularityClass& E);

/// Every singular stratum link of FX lies in E.
ClassVerdict links_in_class(const FilteredComplex& FX, const SingularityClass& E, Exec exec = Exec::Parallel);
/// Core of the maximal desuspension lies in E; spheres and ∅ are members.
ClassVerdict g_of_e_membership(const SimplicialComplex& K, const SingularityClass& E);
ClassVerdict siegel_membership(const SimplicialComplex& K, const SingularityClass& E);

/// K = {a,b} * Z literally, repeatedly; returns Z and the number of stripped pairs.
std::pair<SimplicialComplex, int> strip_literal_suspensions(const SimplicialComplex& K);

enum class Route { Stratified, Polyhedral };

ClassVerdict f_membership(const SimplicialComplex& K, const SingularityClass& E, Route via,
                          Exec exec = Exec::Parallel);
/// Polyhedral links Σ^{dim σ}(lk σ) of all faces off the boundary lie in the link class G.
ClassVerdict polyhedral_links_in(const SimplicialComplex& K, const SingularityClass& G, Exec exec = Exec::Parallel);

}  // namespace strata
