#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "strata/strat.hpp"

namespace strata {

namespace {

bool all_ridges_degree_two(const SimplicialComplex& L) {
  for (const auto& [r, d] : ridge_degrees(L))
    if (d != 2) return false;
  return true;
}

/// Pure complex as facets plus the set of all faces, cheap to rebuild after each contraction.
struct Shell {
  std::vector<Simplex> facets;
  std::unordered_set<Simplex, SimplexHash> faces;
  std::unordered_map<Vertex, std::vector<int>> star;

  explicit Shell(std::vector<Simplex> fs) : facets(std::move(fs)) {
    for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
      const Simplex& f = facets[i];
      for (Vertex v : f) star[v].push_back(i);
      const std::size_t m = f.size();
      for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        Simplex t;
        for (std::size_t j = 0; j < m; ++j)
          if (mask >> j & 1) t.push_back(f[j]);
        faces.insert(std::move(t));
      }
    }
  }

  /// lk a ∩ lk b = lk ab: no τ in the star of a with τ∪b a face but τ∪ab not.
  bool link_condition(Vertex a, Vertex b) const {
    for (int fi : star.at(a)) {
      Simplex rest;
      for (Vertex v : facets[fi])
        if (v != a && v != b) rest.push_back(v);
      const std::size_t m = rest.size();
      for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        Simplex tau;
        for (std::size_t j = 0; j < m; ++j)
          if (mask >> j & 1) tau.push_back(rest[j]);
        Simplex tb = tau;
        tb.insert(std::lower_bound(tb.begin(), tb.end(), b), b);
        if (!faces.count(tb)) continue;
        Simplex tab = tb;
        tab.insert(std::lower_bound(tab.begin(), tab.end(), a), a);
        if (!faces.count(tab)) return false;
      }
    }
    return true;
  }

  std::vector<Simplex> contracted(Vertex keep, Vertex gone) const {
    std::vector<Simplex> out;
    for (const auto& f : facets) {
      const bool hk = std::binary_search(f.begin(), f.end(), keep);
      const bool hg = std::binary_search(f.begin(), f.end(), gone);
      if (hk && hg) continue;
      if (!hg) {
        out.push_back(f);
        continue;
      }
      Simplex g;
      for (Vertex v : f) g.push_back(v == gone ? keep : v);
      std::sort(g.begin(), g.end());
      out.push_back(std::move(g));
    }
    return out;
  }
};

/// Edge contractions satisfying the link condition down to the boundary of a simplex.
bool contracts_to_simplex_boundary(const SimplicialComplex& L, int d) {
  Shell K(L.facets());
  while (!(K.star.size() == static_cast<std::size_t>(d + 2) && K.facets.size() == static_cast<std::size_t>(d + 2))) {
    bool moved = false;
    std::vector<Vertex> order;
    for (const auto& [v, st] : K.star) order.push_back(v);
    std::sort(order.begin(), order.end());
    for (Vertex a : order) {
      std::set<Vertex> nbrs;
      for (int fi : K.star.at(a))
        for (Vertex v : K.facets[fi])
          if (v != a) nbrs.insert(v);
      for (Vertex b : nbrs)
        if (K.link_condition(a, b)) {
          K = Shell(K.contracted(a, b));
          moved = true;
          break;
        }
      if (moved) break;
    }
    if (!moved) return false;
  }
  return true;
}

/// only_vertex < 0: check every vertex link; otherwise only that vertex (others are known spheres).
Recognition sphere_impl(const SimplicialComplex& L, int d, bool check_links, Vertex only_vertex) {
  if (d < 0) return L.is_empty() ? Recognition::Yes : Recognition::No;
  if (L.is_empty() || L.dimension() != d || !L.is_pure()) return Recognition::No;
  if (d == 0) return L.vertices().size() == 2 ? Recognition::Yes : Recognition::No;
  if (!all_ridges_degree_two(L)) return Recognition::No;
  if (!is_connected(L)) return Recognition::No;
  if (d == 1) return Recognition::Yes;
  bool heuristic = false;
  for (Vertex v : L.vertices()) {
    if (!check_links && v != only_vertex) continue;
    const Recognition r = recognize_sphere(link(L, {v}), d - 1);
    if (r == Recognition::No) return Recognition::No;
    if (r == Recognition::Heuristic) heuristic = true;
  }
  if (d == 2) return euler_characteristic_faces(L) == 2 ? Recognition::Yes : Recognition::No;
  if (!contracts_to_simplex_boundary(L, d)) return is_homology_sphere(L, d) ? Recognition::Heuristic : Recognition::No;
  return heuristic ? Recognition::Heuristic : Recognition::Yes;
}

}  // namespace

Recognition recognize_sphere(const SimplicialComplex& L, int d, bool vertex_links_known) {
  return sphere_impl(L, d, !vertex_links_known, -1);
}

Recognition recognize_ball(const SimplicialComplex& L, int d, bool vertex_links_known) {
  if (d < 0) return Recognition::No;
  if (L.is_empty() || L.dimension() != d || !L.is_pure()) return Recognition::No;
  if (d == 0) return L.vertices().size() == 1 ? Recognition::Yes : Recognition::No;
  const SimplicialComplex B = boundary_subcomplex(L);
  if (B.is_empty()) return Recognition::No;
  const Vertex apex = L.max_vertex() + 1;
  std::vector<Simplex> fs = L.facets();
  for (auto f : B.facets()) {
    f.push_back(apex);
    fs.push_back(std::move(f));
  }
  return sphere_impl(SimplicialComplex::from_facets(std::move(fs)), d, !vertex_links_known, apex);
}

}  // namespace strata
