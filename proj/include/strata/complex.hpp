#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "strata/error.hpp"

namespace strata {

using Vertex = int;
/// Strictly increasing vertex list.
using Simplex = std::vector<Vertex>;
using VertexMap = std::map<Vertex, Vertex>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Vertex v : s) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }
bool is_face_of(const Simplex& small, const Simplex& big);
Simplex simplex_union(const Simplex& a, const Simplex& b);
Simplex simplex_minus(const Simplex& a, const Simplex& b);
bool disjoint(const Simplex& a, const Simplex& b);
/// All nonempty faces of s, including s itself.
std::vector<Simplex> all_faces(const Simplex& s);
/// Parity (+1 even, −1 odd) of the permutation sorting `seq`.
int permutation_sign(std::vector<Vertex> seq);

/// Face lattice: faces grouped by dimension in lexicographic order.
struct FaceLattice {
  std::vector<std::vector<Simplex>> by_dim;
  std::vector<std::unordered_map<Simplex, int, SimplexHash>> index;
  /// Facet indices (into facets()) containing each vertex.
  std::unordered_map<Vertex, std::vector<int>> vertex_facets;
  /// Global numbering: offset[d] + position in by_dim[d].
  std::vector<int> offset;
  int total = 0;

  int find(const Simplex& s) const;
  int global_id(const Simplex& s) const;
  const Simplex& by_global(int id) const;
  int dim_of_global(int id) const;
};

class SimplicialComplex {
 public:
  SimplicialComplex();

  /// Canonicalizes: sorts and deduplicates vertices and facets, absorbs non-maximal faces.
  static SimplicialComplex from_facets(std::vector<Simplex> facets, bool allow_empty = false,
                                       int nominal_dimension = -1);
  static SimplicialComplex empty(int nominal_dimension = -1);
  /// Closure of the given generators.
  static SimplicialComplex generated(std::vector<Simplex> gens, int nominal_dimension = -1);

  const std::vector<Simplex>& facets() const { return facets_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  int dimension() const { return dim_; }
  int nominal_dimension() const { return nominal_; }
  bool is_empty() const { return facets_.empty(); }
  bool contains(const Simplex& s) const;
  bool contains_vertex(Vertex v) const;
  const FaceLattice& faces() const;
  std::vector<std::size_t> f_vector() const;
  std::size_t num_faces(int d) const;
  Vertex max_vertex() const { return vertices_.empty() ? -1 : vertices_.back(); }
  bool is_pure() const;

  bool operator==(const SimplicialComplex& other) const {
    return facets_ == other.facets_ && (!facets_.empty() || nominal_ == other.nominal_);
  }
  bool operator!=(const SimplicialComplex& other) const { return !(*this == other); }

 private:
  std::vector<Simplex> facets_;
  std::vector<Vertex> vertices_;
  int dim_ = -1;
  int nominal_ = -1;
  struct Cache {
    std::once_flag once;
    std::unique_ptr<FaceLattice> lattice;
  };
  std::shared_ptr<Cache> cache_;
};

SimplicialComplex link(const SimplicialComplex& K, const Simplex& sigma);
SimplicialComplex star(const SimplicialComplex& K, const Simplex& sigma);
/// Simplices of K all of whose vertices lie in `verts`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::vector<Vertex>& verts);
SimplicialComplex intersection(const SimplicialComplex& A, const SimplicialComplex& B);
SimplicialComplex complex_union(const SimplicialComplex& A, const SimplicialComplex& B);
bool is_subcomplex(const SimplicialComplex& A, const SimplicialComplex& B);
/// Every simplex of K spanned by vertices of A lies in A.
bool is_full_subcomplex(const SimplicialComplex& A, const SimplicialComplex& K);
SimplicialComplex relabel(const SimplicialComplex& K, const VertexMap& map);

struct JoinResult {
  SimplicialComplex complex;
  /// Relabeling applied to the second factor.
  VertexMap right_map;
};
JoinResult join(const SimplicialComplex& K, const SimplicialComplex& L);

struct ConeResult {
  SimplicialComplex complex;
  Vertex apex = 0;
};
ConeResult cone(const SimplicialComplex& K);

struct SuspensionResult {
  SimplicialComplex complex;
  Vertex north = 0;
  Vertex south = 0;
};
SuspensionResult suspension(const SimplicialComplex& K);
/// k-fold suspension.
SimplicialComplex suspension_power(const SimplicialComplex& K, int k);

struct ProductResult {
  SimplicialComplex complex;
  /// New vertex id -> (vertex of first factor, vertex of second factor).
  std::vector<std::pair<Vertex, Vertex>> pairs;
  Vertex id_of(Vertex a, Vertex b) const;
};
/// Staircase triangulation of |K| x |L| using the vertex orders; vertices numbered lexicographically.
ProductResult product(const SimplicialComplex& K, const SimplicialComplex& L);

struct SubdivisionResult {
  SimplicialComplex complex;
  /// New vertex id -> originating face.
  std::vector<Simplex> provenance;
};
SubdivisionResult barycentric_subdivision(const SimplicialComplex& K);

/// Subcomplex generated by the (n−1)-simplices lying in exactly one facet.
SimplicialComplex boundary_subcomplex(const SimplicialComplex& K);
/// Number of facets containing each ridge.
std::unordered_map<Simplex, int, SimplexHash> ridge_degrees(const SimplicialComplex& K);
int euler_characteristic_faces(const SimplicialComplex& K);
bool is_connected(const SimplicialComplex& K);
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& K);

/// Sign per top facet relative to its sorted vertex order.
struct Orientation {
  std::map<Simplex, int> sign;
  int at(const Simplex& f) const;
  Orientation reversed() const;
  bool operator==(const Orientation& o) const { return sign == o.sign; }
};

/// Sign induced on the ridge `facet` minus its k-th vertex.
inline int induced_sign(int facet_sign, int k) { return (k % 2 == 0) ? facet_sign : -facet_sign; }

struct OrientResult {
  bool orientable = false;
  Orientation orientation;
  /// Closed facet path whose propagated signs contradict; empty when orientable.
  std::vector<Simplex> witness_cycle;
};
/// Sign propagation over facet adjacency through ridges; first facet of each component positive.
OrientResult orient(const SimplicialComplex& K);
/// Induced signs cancel on every ridge shared by two facets.
bool is_coherent(const SimplicialComplex& K, const Orientation& o);

struct IsoOptions {
  std::function<int(const Simplex&)> label1;
  std::function<int(const Simplex&)> label2;
  const Orientation* orientation1 = nullptr;
  const Orientation* orientation2 = nullptr;
  /// +1: facet signs preserved, −1: reversed.
  int orientation_relation = 1;
  /// Barycentric subdivisions applied to both sides before matching.
  int subdivisions = 0;
};

/// Backtracking search over label/degree-refined candidate vertices.
std::optional<VertexMap> isomorphic(const SimplicialComplex& K1, const SimplicialComplex& K2,
                                    const IsoOptions& opts = {});
bool verify_isomorphism(const SimplicialComplex& K1, const SimplicialComplex& K2, const VertexMap& map,
                        const IsoOptions& opts = {});
/// Sign of the orientation pushed forward along a vertex map, for a facet of the source.
int pushforward_sign(const Simplex& facet, int sign, const VertexMap& map);
Simplex map_simplex(const Simplex& s, const VertexMap& map);

std::string to_string(const Simplex& s);

}  // namespace strata
