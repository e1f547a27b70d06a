#pragma once

#include <string>
#include <vector>

#include "strata/algebra.hpp"
#include "strata/strat.hpp"

namespace strata {

struct Perversity {
  /// values[k] = p̄(k) for k ≥ 2; entries 0 and 1 are unused.
  std::vector<int> values;
  std::string name;

  int at(int k) const;
  int max_codim() const { return static_cast<int>(values.size()) - 1; }
  /// p̄(2) = 0 and p̄(k) ≤ p̄(k+1) ≤ p̄(k) + 1.
  bool is_gm() const;
  bool operator<=(const Perversity& o) const;
};

Perversity lower_middle(int n);
Perversity upper_middle(int n);
Perversity zero_perversity(int n);
Perversity top_perversity(int n);
/// "m", "n", "0", "t" or an explicit comma list of p̄(2), p̄(3), ...
Perversity parse_perversity(const std::string& s, int n);

struct AllowabilityTable {
  /// meet_dim[id][k] = dim(σ ∩ X^{n−k}) for k = 2..n, −1 standing for the empty intersection.
  std::vector<std::vector<int>> meet_dim;
  std::vector<char> allowable;
};

AllowabilityTable allowability(const FilteredComplex& FX, const Perversity& p);

using IHGroup = HomologyGroup;

/// Subdivides (bounded by STRATA_SUBDIV_LIMIT, default 2) until the skeleta are full subcomplexes.
FilteredComplex make_full(const FilteredComplex& FX);

std::vector<IHGroup> intersection_homology(const FilteredComplex& FX, const Perversity& p, const Ring& ring,
                                           Exec exec = Exec::Parallel);
std::vector<BigInt> ih_torsion(const FilteredComplex& FX, const Perversity& p, int degree);

}  // namespace strata
