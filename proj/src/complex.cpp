#include "strata/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

namespace strata {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::SimplexNotFound: return "SimplexNotFound";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::RidgeDegreeViolation: return "RidgeDegreeViolation";
    case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorKind::MalformedFiltration: return "MalformedFiltration";
    case ErrorKind::NoTopSimplex: return "NoTopSimplex";
    case ErrorKind::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorKind::DifferentCarrier: return "DifferentCarrier";
    case ErrorKind::BoundaryPoint: return "BoundaryPoint";
    case ErrorKind::NotClassical: return "NotClassical";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotValidated: return "NotValidated";
    case ErrorKind::PerversityViolation: return "PerversityViolation";
    case ErrorKind::UnsupportedCoefficients: return "UnsupportedCoefficients";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::IncompatibleOrientations: return "IncompatibleOrientations";
    case ErrorKind::IsomorphismMissing: return "IsomorphismMissing";
    case ErrorKind::SignClash: return "SignClash";
    case ErrorKind::NoIsomorphism: return "NoIsomorphism";
    case ErrorKind::CollarMissing: return "CollarMissing";
    case ErrorKind::NotFull: return "NotFull";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SubdivisionLimit: return "SubdivisionLimit";
    case ErrorKind::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

bool is_face_of(const Simplex& small, const Simplex& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex simplex_minus(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const Simplex& a, const Simplex& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

std::vector<Simplex> all_faces(const Simplex& s) {
  std::vector<Simplex> out;
  const std::size_t n = s.size();
  const std::uint64_t total = 1ull << n;
  out.reserve(total - 1);
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) f.push_back(s[i]);
    out.push_back(std::move(f));
  }
  return out;
}

int permutation_sign(std::vector<Vertex> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    while (true) {
      std::size_t target = 0;
      for (std::size_t j = 0; j < seq.size(); ++j)
        if (seq[j] < seq[i]) ++target;
      if (target == i) break;
      std::swap(seq[i], seq[target]);
      sign = -sign;
    }
  }
  return sign;
}

int FaceLattice::find(const Simplex& s) const {
  const int d = simplex_dim(s);
  if (d < 0 || d >= static_cast<int>(index.size())) return -1;
  auto it = index[d].find(s);
  return it == index[d].end() ? -1 : it->second;
}

int FaceLattice::global_id(const Simplex& s) const {
  const int i = find(s);
  return i < 0 ? -1 : offset[simplex_dim(s)] + i;
}

int FaceLattice::dim_of_global(int id) const {
  auto it = std::upper_bound(offset.begin(), offset.end(), id);
  return static_cast<int>(it - offset.begin()) - 1;
}

const Simplex& FaceLattice::by_global(int id) const {
  const int d = dim_of_global(id);
  return by_dim[d][id - offset[d]];
}

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<Cache>()) {}

SimplicialComplex SimplicialComplex::empty(int nominal_dimension) {
  SimplicialComplex K;
  K.nominal_ = nominal_dimension;
  return K;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets, bool allow_empty,
                                                 int nominal_dimension) {
  if (facets.empty()) {
    if (!allow_empty) throw Error(ErrorKind::EmptyInput, "no facets given");
    return empty(nominal_dimension);
  }
  for (auto& f : facets) {
    if (f.empty()) throw Error(ErrorKind::EmptyInput, "empty facet");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.front() < 0) throw Error(ErrorKind::ParseError, "negative vertex id");
  }
  std::sort(facets.begin(), facets.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<Simplex> kept;
  std::unordered_map<Vertex, std::vector<int>> by_vertex;
  const std::size_t top = facets.front().size();
  for (auto& f : facets) {
    bool absorbed = false;
    if (f.size() < top) {
      const std::vector<int>* best = nullptr;
      for (Vertex v : f) {
        auto it = by_vertex.find(v);
        if (it == by_vertex.end()) { best = nullptr; break; }
        if (!best || it->second.size() < best->size()) best = &it->second;
      }
      if (best)
        for (int idx : *best)
          if (kept[idx].size() > f.size() && is_face_of(f, kept[idx])) { absorbed = true; break; }
    }
    if (absorbed) continue;
    const int idx = static_cast<int>(kept.size());
    for (Vertex v : f) by_vertex[v].push_back(idx);
    kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  SimplicialComplex K;
  std::set<Vertex> vs;
  int dim = -1;
  for (const auto& f : kept) {
    vs.insert(f.begin(), f.end());
    dim = std::max(dim, simplex_dim(f));
  }
  K.facets_ = std::move(kept);
  K.vertices_.assign(vs.begin(), vs.end());
  K.dim_ = dim;
  K.nominal_ = dim;
  return K;
}

SimplicialComplex SimplicialComplex::generated(std::vector<Simplex> gens, int nominal_dimension) {
  return from_facets(std::move(gens), true, nominal_dimension);
}

const FaceLattice& SimplicialComplex::faces() const {
  std::call_once(cache_->once, [this] {
    auto L = std::make_unique<FaceLattice>();
    const int n = dim_;
    L->by_dim.resize(n + 1);
    L->index.resize(n + 1);
    std::vector<std::unordered_set<Simplex, SimplexHash>> sets(n + 1);
    for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
      const auto& f = facets_[fi];
      for (Vertex v : f) L->vertex_facets[v].push_back(static_cast<int>(fi));
      for (auto& face : all_faces(f)) sets[simplex_dim(face)].insert(std::move(face));
    }
    L->offset.resize(n + 2, 0);
    int total = 0;
    for (int d = 0; d <= n; ++d) {
      L->offset[d] = total;
      auto& vec = L->by_dim[d];
      vec.assign(sets[d].begin(), sets[d].end());
      std::sort(vec.begin(), vec.end());
      L->index[d].reserve(vec.size());
      for (std::size_t i = 0; i < vec.size(); ++i) L->index[d].emplace(vec[i], static_cast<int>(i));
      total += static_cast<int>(vec.size());
    }
    L->offset[n + 1] = total;
    L->total = total;
    cache_->lattice = std::move(L);
  });
  return *cache_->lattice;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  return faces().find(s) >= 0;
}

bool SimplicialComplex::contains_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  if (is_empty()) return f;
  for (const auto& d : faces().by_dim) f.push_back(d.size());
  return f;
}

std::size_t SimplicialComplex::num_faces(int d) const {
  if (d < 0 || d > dim_) return 0;
  return faces().by_dim[d].size();
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets_)
    if (simplex_dim(f) != dim_) return false;
  return true;
}

SimplicialComplex link(const SimplicialComplex& K, const Simplex& sigma) {
  if (sigma.empty()) return K;
  if (!K.contains(sigma)) throw Error(ErrorKind::SimplexNotFound, to_string(sigma));
  const auto& L = K.faces();
  const std::vector<int>* best = nullptr;
  for (Vertex v : sigma) {
    const auto& lst = L.vertex_facets.at(v);
    if (!best || lst.size() < best->size()) best = &lst;
  }
  std::vector<Simplex> out;
  for (int idx : *best) {
    const auto& f = K.facets()[idx];
    if (f.size() > sigma.size() && is_face_of(sigma, f)) out.push_back(simplex_minus(f, sigma));
  }
  const int nominal = K.dimension() - static_cast<int>(sigma.size());
  return SimplicialComplex::from_facets(std::move(out), true, nominal);
}

SimplicialComplex star(const SimplicialComplex& K, const Simplex& sigma) {
  if (sigma.empty()) return K;
  if (!K.contains(sigma)) throw Error(ErrorKind::SimplexNotFound, to_string(sigma));
  std::vector<Simplex> out;
  for (int idx : K.faces().vertex_facets.at(sigma.front())) {
    const auto& f = K.facets()[idx];
    if (is_face_of(sigma, f)) out.push_back(f);
  }
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::vector<Vertex>& verts) {
  std::vector<Vertex> vs = verts;
  std::sort(vs.begin(), vs.end());
  std::vector<Simplex> out;
  for (const auto& f : K.facets()) {
    Simplex g;
    std::set_intersection(f.begin(), f.end(), vs.begin(), vs.end(), std::back_inserter(g));
    if (!g.empty()) out.push_back(std::move(g));
  }
  return SimplicialComplex::from_facets(std::move(out), true);
}

SimplicialComplex intersection(const SimplicialComplex& A, const SimplicialComplex& B) {
  if (A.is_empty() || B.is_empty()) return SimplicialComplex::empty();
  const SimplicialComplex& small = A.faces().total <= B.faces().total ? A : B;
  const SimplicialComplex& big = &small == &A ? B : A;
  std::vector<Simplex> out;
  for (const auto& dim : small.faces().by_dim)
    for (const auto& s : dim)
      if (big.contains(s)) out.push_back(s);
  return SimplicialComplex::from_facets(std::move(out), true);
}

SimplicialComplex complex_union(const SimplicialComplex& A, const SimplicialComplex& B) {
  std::vector<Simplex> out = A.facets();
  out.insert(out.end(), B.facets().begin(), B.facets().end());
  return SimplicialComplex::from_facets(std::move(out), true);
}

bool is_subcomplex(const SimplicialComplex& A, const SimplicialComplex& B) {
  for (const auto& f : A.facets())
    if (!B.contains(f)) return false;
  return true;
}

bool is_full_subcomplex(const SimplicialComplex& A, const SimplicialComplex& K) {
  if (!is_subcomplex(A, K)) return false;
  const auto& verts = A.vertices();
  for (const auto& f : K.facets()) {
    Simplex g;
    std::set_intersection(f.begin(), f.end(), verts.begin(), verts.end(), std::back_inserter(g));
    if (g.size() >= 2 && !A.contains(g)) return false;
  }
  return true;
}

Simplex map_simplex(const Simplex& s, const VertexMap& map) {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) {
    auto it = map.find(v);
    if (it == map.end()) throw Error(ErrorKind::NoIsomorphism, "vertex " + std::to_string(v) + " unmapped");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex relabel(const SimplicialComplex& K, const VertexMap& map) {
  std::vector<Simplex> out;
  out.reserve(K.facets().size());
  for (const auto& f : K.facets()) out.push_back(map_simplex(f, map));
  return SimplicialComplex::from_facets(std::move(out), true, K.nominal_dimension());
}

JoinResult join(const SimplicialComplex& K, const SimplicialComplex& L) {
  JoinResult r;
  bool clash = false;
  for (Vertex v : L.vertices())
    if (K.contains_vertex(v)) { clash = true; break; }
  const Vertex shift = clash ? K.max_vertex() + 1 : 0;
  for (Vertex v : L.vertices()) r.right_map[v] = v + shift;
  const int nominal = K.nominal_dimension() + L.nominal_dimension() + 1;
  if (K.is_empty()) {
    r.complex = relabel(L, r.right_map);
    if (L.is_empty()) r.complex = SimplicialComplex::empty(nominal);
    return r;
  }
  if (L.is_empty()) {
    r.complex = K;
    return r;
  }
  std::vector<Simplex> out;
  out.reserve(K.facets().size() * L.facets().size());
  for (const auto& f : K.facets())
    for (const auto& g : L.facets()) {
      Simplex h = f;
      for (Vertex v : g) h.push_back(v + shift);
      out.push_back(std::move(h));
    }
  r.complex = SimplicialComplex::from_facets(std::move(out));
  return r;
}

ConeResult cone(const SimplicialComplex& K) {
  ConeResult r;
  r.apex = K.max_vertex() + 1;
  if (K.is_empty()) {
    r.complex = SimplicialComplex::from_facets({{r.apex}});
    return r;
  }
  std::vector<Simplex> out;
  for (auto f : K.facets()) {
    f.push_back(r.apex);
    out.push_back(std::move(f));
  }
  r.complex = SimplicialComplex::from_facets(std::move(out));
  return r;
}

SuspensionResult suspension(const SimplicialComplex& K) {
  SuspensionResult r;
  r.north = K.max_vertex() + 1;
  r.south = K.max_vertex() + 2;
  if (K.is_empty()) {
    r.complex = SimplicialComplex::from_facets({{r.north}, {r.south}});
    return r;
  }
  std::vector<Simplex> out;
  for (const auto& f : K.facets()) {
    Simplex a = f, b = f;
    a.push_back(r.north);
    b.push_back(r.south);
    out.push_back(std::move(a));
    out.push_back(std::move(b));
  }
  r.complex = SimplicialComplex::from_facets(std::move(out));
  return r;
}

SimplicialComplex suspension_power(const SimplicialComplex& K, int k) {
  SimplicialComplex out = K;
  for (int i = 0; i < k; ++i) out = suspension(out).complex;
  return out;
}

Vertex ProductResult::id_of(Vertex a, Vertex b) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b));
  if (it == pairs.end() || *it != std::make_pair(a, b))
    throw Error(ErrorKind::SimplexNotFound, "product vertex");
  return static_cast<Vertex>(it - pairs.begin());
}

namespace {

void staircases(const Simplex& f, const Simplex& g, std::size_t i, std::size_t j,
                std::vector<std::pair<Vertex, Vertex>>& path,
                std::vector<std::vector<std::pair<Vertex, Vertex>>>& out) {
  path.emplace_back(f[i], g[j]);
  if (i + 1 == f.size() && j + 1 == g.size()) {
    out.push_back(path);
  } else {
    if (i + 1 < f.size()) staircases(f, g, i + 1, j, path, out);
    if (j + 1 < g.size()) staircases(f, g, i, j + 1, path, out);
  }
  path.pop_back();
}

}  // namespace

ProductResult product(const SimplicialComplex& K, const SimplicialComplex& L) {
  if (K.is_empty() || L.is_empty()) throw Error(ErrorKind::EmptyInput, "product of empty complex");
  ProductResult r;
  for (Vertex a : K.vertices())
    for (Vertex b : L.vertices()) r.pairs.emplace_back(a, b);
  std::unordered_map<Vertex, int> rk, rl;
  for (std::size_t i = 0; i < K.vertices().size(); ++i) rk[K.vertices()[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < L.vertices().size(); ++i) rl[L.vertices()[i]] = static_cast<int>(i);
  const int nl = static_cast<int>(L.vertices().size());
  std::vector<Simplex> out;
  std::vector<std::pair<Vertex, Vertex>> path;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> chains;
  for (const auto& f : K.facets())
    for (const auto& g : L.facets()) {
      chains.clear();
      staircases(f, g, 0, 0, path, chains);
      for (const auto& ch : chains) {
        Simplex s;
        for (auto [a, b] : ch) s.push_back(rk[a] * nl + rl[b]);
        out.push_back(std::move(s));
      }
    }
  r.complex = SimplicialComplex::from_facets(std::move(out));
  return r;
}

SubdivisionResult barycentric_subdivision(const SimplicialComplex& K) {
  SubdivisionResult r;
  if (K.is_empty()) {
    r.complex = K;
    return r;
  }
  const auto& L = K.faces();
  r.provenance.resize(L.total);
  for (int d = 0; d <= K.dimension(); ++d)
    for (std::size_t i = 0; i < L.by_dim[d].size(); ++i) r.provenance[L.offset[d] + i] = L.by_dim[d][i];
  std::vector<Simplex> out;
  for (const auto& f : K.facets()) {
    std::vector<int> perm(f.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Simplex chain, face;
      for (int p : perm) {
        face.push_back(f[p]);
        Simplex sorted = face;
        std::sort(sorted.begin(), sorted.end());
        chain.push_back(L.global_id(sorted));
      }
      out.push_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  r.complex = SimplicialComplex::from_facets(std::move(out));
  return r;
}

std::unordered_map<Simplex, int, SimplexHash> ridge_degrees(const SimplicialComplex& K) {
  std::unordered_map<Simplex, int, SimplexHash> deg;
  for (const auto& f : K.facets()) {
    if (f.size() < 2) continue;
    for (std::size_t k = 0; k < f.size(); ++k) {
      Simplex r = f;
      r.erase(r.begin() + k);
      ++deg[r];
    }
  }
  return deg;
}

SimplicialComplex boundary_subcomplex(const SimplicialComplex& K) {
  if (!K.is_pure()) throw Error(ErrorKind::NotPure, "boundary of a non-pure complex");
  if (K.dimension() <= 0) return SimplicialComplex::empty(K.dimension() - 1);
  std::vector<Simplex> out;
  for (auto& [r, d] : ridge_degrees(K))
    if (d == 1) out.push_back(r);
  return SimplicialComplex::from_facets(std::move(out), true, K.dimension() - 1);
}

int euler_characteristic_faces(const SimplicialComplex& K) {
  int chi = 0;
  int sign = 1;
  for (std::size_t c : K.f_vector()) {
    chi += sign * static_cast<int>(c);
    sign = -sign;
  }
  return chi;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& K) {
  const auto& vs = K.vertices();
  std::unordered_map<Vertex, int> idx;
  for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
  UnionFind uf(static_cast<int>(vs.size()));
  for (const auto& f : K.facets())
    for (std::size_t i = 1; i < f.size(); ++i) uf.unite(idx[f[0]], idx[f[i]]);
  std::map<int, std::vector<Simplex>> groups;
  for (const auto& f : K.facets()) groups[uf.find(idx[f[0]])].push_back(f);
  std::vector<SimplicialComplex> out;
  for (auto& [root, fs] : groups) out.push_back(SimplicialComplex::from_facets(std::move(fs)));
  return out;
}

bool is_connected(const SimplicialComplex& K) { return connected_components(K).size() <= 1; }

int Orientation::at(const Simplex& f) const {
  auto it = sign.find(f);
  return it == sign.end() ? 0 : it->second;
}

Orientation Orientation::reversed() const {
  Orientation o;
  for (auto& [f, s] : sign) o.sign[f] = -s;
  return o;
}

namespace {

struct RidgeAdjacency {
  /// facet index -> list of (neighbor facet, my omitted index, neighbor omitted index)
  std::vector<std::vector<std::tuple<int, int, int>>> adj;
};

RidgeAdjacency ridge_adjacency(const SimplicialComplex& K, bool strict) {
  std::unordered_map<Simplex, std::vector<std::pair<int, int>>, SimplexHash> by_ridge;
  const auto& fs = K.facets();
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t k = 0; k < fs[i].size(); ++k) {
      Simplex r = fs[i];
      r.erase(r.begin() + k);
      by_ridge[r].emplace_back(static_cast<int>(i), static_cast<int>(k));
    }
  RidgeAdjacency ra;
  ra.adj.resize(fs.size());
  for (auto& [r, lst] : by_ridge) {
    if (lst.size() > 2) {
      if (strict) throw Error(ErrorKind::RidgeDegreeViolation, "ridge " + to_string(r) + " lies in " +
                                                                    std::to_string(lst.size()) + " facets");
      continue;
    }
    if (lst.size() == 2) {
      auto [a, ka] = lst[0];
      auto [b, kb] = lst[1];
      ra.adj[a].emplace_back(b, ka, kb);
      ra.adj[b].emplace_back(a, kb, ka);
    }
  }
  for (auto& v : ra.adj) std::sort(v.begin(), v.end());
  return ra;
}

}  // namespace

OrientResult orient(const SimplicialComplex& K) {
  OrientResult res;
  if (!K.is_pure()) throw Error(ErrorKind::NotPure, "orient requires a pure complex");
  const auto& fs = K.facets();
  if (K.dimension() <= 0) {
    res.orientable = true;
    for (const auto& f : fs) res.orientation.sign[f] = 1;
    return res;
  }
  RidgeAdjacency ra = ridge_adjacency(K, true);
  const int n = static_cast<int>(fs.size());
  std::vector<int> sign(n, 0), parent(n, -1), depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (auto [b, ka, kb] : ra.adj[a]) {
        const int want = -induced_sign(sign[a], ka) * ((kb % 2 == 0) ? 1 : -1);
        if (sign[b] == 0) {
          sign[b] = want;
          parent[b] = a;
          depth[b] = depth[a] + 1;
          q.push(b);
        } else if (sign[b] != want) {
          std::vector<int> pa, pb;
          int x = a, y = b;
          while (depth[x] > depth[y]) { pa.push_back(x); x = parent[x]; }
          while (depth[y] > depth[x]) { pb.push_back(y); y = parent[y]; }
          while (x != y) {
            pa.push_back(x);
            pb.push_back(y);
            x = parent[x];
            y = parent[y];
          }
          pa.push_back(x);
          // lca -> ... -> a -> b -> ... -> (child of lca)
          for (auto it = pa.rbegin(); it != pa.rend(); ++it) res.witness_cycle.push_back(fs[*it]);
          for (int i : pb) res.witness_cycle.push_back(fs[i]);
          res.orientable = false;
          return res;
        }
      }
    }
  }
  res.orientable = true;
  for (int i = 0; i < n; ++i) res.orientation.sign[fs[i]] = sign[i];
  return res;
}

bool is_coherent(const SimplicialComplex& K, const Orientation& o) {
  if (K.dimension() <= 0) return true;
  for (const auto& f : K.facets())
    if (o.at(f) == 0) return false;
  RidgeAdjacency ra = ridge_adjacency(K, false);
  const auto& fs = K.facets();
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (auto [b, ka, kb] : ra.adj[a])
      if (induced_sign(o.at(fs[a]), ka) + induced_sign(o.at(fs[b]), kb) != 0) return false;
  return true;
}

int pushforward_sign(const Simplex& facet, int sign, const VertexMap& map) {
  std::vector<Vertex> img;
  for (Vertex v : facet) img.push_back(map.at(v));
  return sign * permutation_sign(img);
}

namespace {

bool labels_match(const SimplicialComplex& K1, const VertexMap& map, const IsoOptions& opts) {
  if (!opts.label1 || !opts.label2) return true;
  for (const auto& dim : K1.faces().by_dim)
    for (const auto& s : dim)
      if (opts.label1(s) != opts.label2(map_simplex(s, map))) return false;
  return true;
}

bool orientation_matches(const SimplicialComplex& K1, const VertexMap& map, const IsoOptions& opts) {
  if (!opts.orientation1 || !opts.orientation2) return true;
  for (const auto& f : K1.facets()) {
    const int s1 = opts.orientation1->at(f);
    const int s2 = opts.orientation2->at(map_simplex(f, map));
    if (s1 == 0 || s2 == 0) return false;
    if (pushforward_sign(f, s1, map) != opts.orientation_relation * s2) return false;
  }
  return true;
}

struct IsoSearch {
  const SimplicialComplex& K1;
  const SimplicialComplex& K2;
  const IsoOptions& opts;
  std::vector<Vertex> order;
  std::unordered_map<Vertex, std::vector<Vertex>> nbr1;
  std::unordered_set<std::int64_t> edges2;
  std::unordered_set<Simplex, SimplexHash> facets2;
  std::unordered_map<Vertex, std::vector<int>> inv1, inv2;
  std::unordered_map<Vertex, int> pos;
  VertexMap map;
  std::unordered_set<Vertex> used;
  std::size_t steps = 0;

  IsoSearch(const SimplicialComplex& a, const SimplicialComplex& b, const IsoOptions& o) : K1(a), K2(b), opts(o) {}

  static std::int64_t key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }

  static std::vector<int> invariant(const SimplicialComplex& K, Vertex v,
                                    const std::function<int(const Simplex&)>& label) {
    std::vector<int> inv;
    inv.push_back(label ? label({v}) : 0);
    const auto& vf = K.faces().vertex_facets.at(v);
    inv.push_back(static_cast<int>(vf.size()));
    std::set<Vertex> nb;
    std::map<int, int> sizes;
    for (int i : vf) {
      nb.insert(K.facets()[i].begin(), K.facets()[i].end());
      ++sizes[static_cast<int>(K.facets()[i].size())];
    }
    inv.push_back(static_cast<int>(nb.size()));
    for (auto [s, c] : sizes) {
      inv.push_back(s);
      inv.push_back(c);
    }
    return inv;
  }

  void prepare() {
    for (const auto& f : K1.facets())
      for (Vertex a : f)
        for (Vertex b : f)
          if (a != b) nbr1[a].push_back(b);
    for (auto& [v, lst] : nbr1) {
      std::sort(lst.begin(), lst.end());
      lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    for (const auto& f : K2.facets()) {
      facets2.insert(f);
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) edges2.insert(key(f[i], f[j]));
    }
    std::map<std::vector<int>, int> freq;
    for (Vertex v : K1.vertices()) {
      inv1[v] = invariant(K1, v, opts.label1);
      ++freq[inv1[v]];
    }
    for (Vertex v : K2.vertices()) inv2[v] = invariant(K2, v, opts.label2);
    std::unordered_set<Vertex> seen;
    std::vector<Vertex> remaining = K1.vertices();
    std::stable_sort(remaining.begin(), remaining.end(),
                     [&](Vertex a, Vertex b) { return freq[inv1[a]] < freq[inv1[b]]; });
    for (Vertex start : remaining) {
      if (seen.count(start)) continue;
      std::queue<Vertex> q;
      q.push(start);
      seen.insert(start);
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        order.push_back(v);
        for (Vertex w : nbr1[v])
          if (!seen.count(w)) {
            seen.insert(w);
            q.push(w);
          }
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  }

  bool consistent(Vertex v, Vertex w) {
    for (Vertex u : nbr1[v]) {
      auto it = map.find(u);
      if (it != map.end() && !edges2.count(key(it->second, w))) return false;
    }
    const int pv = pos[v];
    for (int idx : K1.faces().vertex_facets.at(v)) {
      const auto& f = K1.facets()[idx];
      bool complete = true;
      for (Vertex u : f)
        if (u != v && pos[u] > pv) { complete = false; break; }
      if (!complete) continue;
      Simplex img;
      for (Vertex u : f) img.push_back(u == v ? w : map[u]);
      std::sort(img.begin(), img.end());
      if (!facets2.count(img)) return false;
    }
    return true;
  }

  bool search(std::size_t i) {
    if (++steps > 50'000'000) return false;
    if (i == order.size()) return labels_match(K1, map, opts) && orientation_matches(K1, map, opts);
    const Vertex v = order[i];
    std::vector<Vertex> cands;
    Vertex anchor = -1;
    for (Vertex u : nbr1[v])
      if (map.count(u)) { anchor = map[u]; break; }
    if (anchor >= 0) {
      for (int idx : K2.faces().vertex_facets.at(anchor))
        for (Vertex w : K2.facets()[idx]) cands.push_back(w);
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    } else {
      cands = K2.vertices();
    }
    for (Vertex w : cands) {
      if (used.count(w) || inv2[w] != inv1[v]) continue;
      if (!consistent(v, w)) continue;
      map[v] = w;
      used.insert(w);
      if (search(i + 1)) return true;
      map.erase(v);
      used.erase(w);
    }
    return false;
  }
};

}  // namespace

bool verify_isomorphism(const SimplicialComplex& K1, const SimplicialComplex& K2, const VertexMap& map,
                        const IsoOptions& opts) {
  if (K1.vertices().size() != K2.vertices().size() || K1.facets().size() != K2.facets().size()) return false;
  std::set<Vertex> img;
  for (Vertex v : K1.vertices()) {
    auto it = map.find(v);
    if (it == map.end() || !K2.contains_vertex(it->second)) return false;
    img.insert(it->second);
  }
  if (img.size() != K1.vertices().size()) return false;
  std::unordered_set<Simplex, SimplexHash> f2(K2.facets().begin(), K2.facets().end());
  for (const auto& f : K1.facets())
    if (!f2.count(map_simplex(f, map))) return false;
  return labels_match(K1, map, opts) && orientation_matches(K1, map, opts);
}

std::optional<VertexMap> isomorphic(const SimplicialComplex& K1, const SimplicialComplex& K2,
                                    const IsoOptions& opts) {
  if (opts.subdivisions > 0) {
    auto s1 = barycentric_subdivision(K1);
    auto s2 = barycentric_subdivision(K2);
    IsoOptions inner;
    inner.subdivisions = opts.subdivisions - 1;
    if (opts.label1 && opts.label2) {
      auto p1 = s1.provenance;
      auto p2 = s2.provenance;
      auto l1 = opts.label1;
      auto l2 = opts.label2;
      inner.label1 = [p1, l1](const Simplex& s) { return l1(p1[s.back()]); };
      inner.label2 = [p2, l2](const Simplex& s) { return l2(p2[s.back()]); };
    }
    return isomorphic(s1.complex, s2.complex, inner);
  }
  if (K1.is_empty() || K2.is_empty()) {
    if (K1.is_empty() && K2.is_empty()) return VertexMap{};
    return std::nullopt;
  }
  if (K1.vertices().size() != K2.vertices().size() || K1.f_vector() != K2.f_vector()) return std::nullopt;
  IsoSearch s(K1, K2, opts);
  s.prepare();
  std::map<std::vector<int>, int> c1, c2;
  for (auto& [v, inv] : s.inv1) ++c1[inv];
  for (auto& [v, inv] : s.inv2) ++c2[inv];
  if (c1 != c2) return std::nullopt;
  if (s.search(0)) return s.map;
  return std::nullopt;
}

std::string to_string(const Simplex& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

}  // namespace strata
