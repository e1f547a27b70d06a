#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/algebra.hpp"
#include "strata/complex.hpp"

namespace strata {

enum class Recognition { No, Yes, Heuristic };

/// d = −1: empty; 0: two points; 1: connected cycle; 2: closed connected surface with χ = 2;
/// d ≥ 3: homology sphere with sphere vertex links, then link-condition edge contractions.
/// vertex_links_known skips the recursive vertex-link checks when the caller verifies them separately.
Recognition recognize_sphere(const SimplicialComplex& L, int d, bool vertex_links_known = false);
/// Ball iff nonempty boundary and L ∪ cone(∂L) is a sphere.
Recognition recognize_ball(const SimplicialComplex& L, int d, bool vertex_links_known = false);

struct FilteredComplex {
  std::string name;
  SimplicialComplex complex;
  /// skeleta[j] = X^j for j = 0..n; X^{−1} is empty.
  std::vector<SimplicialComplex> skeleta;
  std::optional<SimplicialComplex> boundary;
  bool classical = true;
  std::optional<Orientation> orientation;
  bool heuristic = false;

  int dim() const { return complex.dimension(); }
  /// Least j with σ ∈ X^j.
  int level(const Simplex& s) const;
  /// Levels by global face id of the carrier.
  std::vector<int> level_table() const;
  const SimplicialComplex& skeleton(int j) const;

  static FilteredComplex trivial(const SimplicialComplex& K, std::string name = {});
  /// X^i = {σ : level(σ) ≤ i}; levels indexed by global face id.
  static FilteredComplex from_levels(const SimplicialComplex& K, const std::vector<int>& levels,
                                     std::string name = {});
  /// Skeleton generators keyed by dimension; missing dimensions inherit the next lower one.
  static FilteredComplex from_generators(const SimplicialComplex& K,
                                         const std::map<int, std::vector<Simplex>>& gens, std::string name = {});
  bool same_filtration(const FilteredComplex& o) const;
};

enum class Mode { Closed, WithBoundary };

struct ClauseResult {
  std::string clause;
  std::string title;
  bool pass = true;
  std::string detail;
};

struct ValidationReport {
  bool pass = true;
  /// False when some manifold or link check relied on a non-exact recognition.
  bool exact = true;
  std::vector<ClauseResult> clauses;
  int singular_strata = 0;
  const ClauseResult* first_failure() const;
  bool clause_passed(const std::string& id) const;
};

ValidationReport validate(const FilteredComplex& FX, Mode mode, Exec exec = Exec::Parallel);

struct Stratum {
  int dim = 0;
  /// Open simplices of X^dim − X^{dim−1} forming one component, sorted.
  std::vector<Simplex> simplices;
  bool regular = false;
};

std::vector<Stratum> strata_of(const FilteredComplex& FX);

/// Link of the least top simplex of S with filtration L^k = lk ∩ X^{i+k+1}.
FilteredComplex stratum_link(const FilteredComplex& FX, const Stratum& S);
/// Same construction at a chosen simplex of level i and dimension i.
FilteredComplex link_filtration(const FilteredComplex& FX, const Simplex& sigma);

/// Desuspension data for every face: polyhedral link of a point inside σ is Σ^{dim σ}(lk σ),
/// whose maximal desuspension count is dim σ + J(σ).
struct IntrinsicData {
  static constexpr int kSphere = -1;   // core is empty
  static constexpr int kWhole = -2;    // core is the whole complex
  SimplicialComplex complex;
  std::vector<int> J;
  std::vector<int> core;
  std::vector<char> heuristic;
  int J_whole = 0;
  int core_whole = kWhole;
  bool heuristic_whole = false;
  bool any_heuristic = false;

  int jint(const Simplex& s) const;
  int J_of(const Simplex& s) const;
  /// Core complex of the link of σ (σ empty: of the whole complex).
  SimplicialComplex core_complex(const Simplex& s) const;
  SimplicialComplex core_of_whole() const;
};

/// `boundary_shift`: faces of the given boundary use the closed intrinsic data of the boundary plus a collar.
IntrinsicData intrinsic_data(const SimplicialComplex& K, Exec exec = Exec::Parallel,
                             const SimplicialComplex* boundary = nullptr);
FilteredComplex intrinsic_stratification(const SimplicialComplex& K, Exec exec = Exec::Parallel);
FilteredComplex intrinsic_from_data(const IntrinsicData& D, std::string name = {});
/// Interior intrinsic stratification of a ∂-pseudomanifold with collared boundary strata.
FilteredComplex intrinsic_with_boundary(const SimplicialComplex& K, Exec exec = Exec::Parallel);

bool coarsens(const FilteredComplex& coarse, const FilteredComplex& fine);

struct LinkDecomposition {
  int j = 0;
  SimplicialComplex core;
  bool heuristic = false;
  /// sd(Σ^j core) matched the link of the barycenter in sd(K).
  bool reconstruction_isomorphic = false;
};

/// x is the barycenter of face σ.
LinkDecomposition polyhedral_link_decomposition(const FilteredComplex& FX, const Simplex& sigma);

Orientation extend_orientation_to_intrinsic(const FilteredComplex& FX);

/// Barycentric subdivision with the induced filtration (a chain lies in X'^j iff its top face lies in X^j).
FilteredComplex subdivide(const FilteredComplex& FX, std::vector<Simplex>* provenance = nullptr);
/// Every skeleton is a full subcomplex.
bool is_full(const FilteredComplex& FX);

/// Stratified invariant: (dimension, integral homology of the carrier, sorted invariants of its strata links).
std::string link_invariant(const FilteredComplex& L);

}  // namespace strata
