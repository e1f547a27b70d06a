#include "strata/strat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace strata {

int FilteredComplex::level(const Simplex& s) const {
  for (std::size_t j = 0; j < skeleta.size(); ++j)
    if (skeleta[j].contains(s)) return static_cast<int>(j);
  if (complex.contains(s)) return dim();
  throw Error(ErrorKind::SimplexNotFound, to_string(s));
}

std::vector<int> FilteredComplex::level_table() const {
  const auto& F = complex.faces();
  std::vector<int> lv(F.total, dim());
  for (int j = static_cast<int>(skeleta.size()) - 1; j >= 0; --j) {
    const auto& S = skeleta[j];
    if (S.is_empty()) continue;
    for (const auto& byd : S.faces().by_dim)
      for (const auto& s : byd) {
        const int id = F.global_id(s);
        if (id >= 0) lv[id] = j;
      }
  }
  return lv;
}

const SimplicialComplex& FilteredComplex::skeleton(int j) const {
  static const SimplicialComplex kEmpty = SimplicialComplex::empty(-1);
  if (j < 0) return kEmpty;
  if (j >= static_cast<int>(skeleta.size())) return complex;
  return skeleta[j];
}

FilteredComplex FilteredComplex::trivial(const SimplicialComplex& K, std::string name) {
  FilteredComplex FX;
  FX.name = std::move(name);
  FX.complex = K;
  for (int j = 0; j < K.dimension(); ++j) FX.skeleta.push_back(SimplicialComplex::empty(j));
  if (K.dimension() >= 0) FX.skeleta.push_back(K);
  return FX;
}

FilteredComplex FilteredComplex::from_levels(const SimplicialComplex& K, const std::vector<int>& levels,
                                             std::string name) {
  FilteredComplex FX;
  FX.name = std::move(name);
  FX.complex = K;
  const int n = K.dimension();
  const auto& F = K.faces();
  std::vector<std::vector<Simplex>> gens(n + 1);
  for (int d = 0; d <= n; ++d)
    for (std::size_t i = 0; i < F.by_dim[d].size(); ++i) {
      const int lv = levels[F.offset[d] + i];
      for (int j = std::max(lv, 0); j < n; ++j) gens[j].push_back(F.by_dim[d][i]);
    }
  for (int j = 0; j < n; ++j) FX.skeleta.push_back(SimplicialComplex::generated(std::move(gens[j]), j));
  if (n >= 0) FX.skeleta.push_back(K);
  return FX;
}

FilteredComplex FilteredComplex::from_generators(const SimplicialComplex& K,
                                                 const std::map<int, std::vector<Simplex>>& gens,
                                                 std::string name) {
  FilteredComplex FX;
  FX.name = std::move(name);
  FX.complex = K;
  const int n = K.dimension();
  for (int j = 0; j <= n; ++j) {
    auto it = gens.find(j);
    if (it != gens.end()) {
      FX.skeleta.push_back(SimplicialComplex::generated(it->second, j));
    } else if (j == n) {
      FX.skeleta.push_back(K);
    } else {
      FX.skeleta.push_back(j == 0 ? SimplicialComplex::empty(0) : FX.skeleta.back());
    }
  }
  return FX;
}

bool FilteredComplex::same_filtration(const FilteredComplex& o) const {
  if (complex != o.complex || skeleta.size() != o.skeleta.size()) return false;
  for (std::size_t j = 0; j < skeleta.size(); ++j)
    if (skeleta[j].facets() != o.skeleta[j].facets()) return false;
  return true;
}

const ClauseResult* ValidationReport::first_failure() const {
  for (const auto& c : clauses)
    if (!c.pass) return &c;
  return nullptr;
}

bool ValidationReport::clause_passed(const std::string& id) const {
  for (const auto& c : clauses)
    if (c.clause == id) return c.pass;
  return true;
}

FilteredComplex link_filtration(const FilteredComplex& FX, const Simplex& sigma) {
  const int n = FX.dim();
  const int i = FX.level(sigma);
  FilteredComplex L;
  L.complex = link(FX.complex, sigma);
  L.classical = FX.classical;
  L.name = FX.name.empty() ? "link" : FX.name + ":lk" + to_string(sigma);
  const int m = n - i - 1;
  for (int k = 0; k < m; ++k) {
    const SimplicialComplex& Xs = FX.skeleton(i + k + 1);
    if (Xs.is_empty() || !Xs.contains(sigma)) {
      L.skeleta.push_back(SimplicialComplex::empty(k));
      continue;
    }
    SimplicialComplex part = intersection(L.complex, link(Xs, sigma));
    L.skeleta.push_back(part.is_empty() ? SimplicialComplex::empty(k) : part);
  }
  if (m >= 0) L.skeleta.push_back(L.complex);
  if (FX.boundary && FX.boundary->contains(sigma)) L.boundary = link(*FX.boundary, sigma);
  return L;
}

std::vector<Stratum> strata_of(const FilteredComplex& FX) {
  const auto& F = FX.complex.faces();
  const std::vector<int> lv = FX.level_table();
  const int N = F.total;
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int d = 1; d <= FX.dim(); ++d)
    for (std::size_t i = 0; i < F.by_dim[d].size(); ++i) {
      const int id = F.offset[d] + static_cast<int>(i);
      const auto& s = F.by_dim[d][i];
      for (std::size_t k = 0; k < s.size(); ++k) {
        Simplex f = s;
        f.erase(f.begin() + k);
        const int fid = F.global_id(f);
        if (lv[fid] == lv[id]) {
          int a = find(id), b = find(fid);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
  std::map<int, Stratum> groups;
  for (int id = 0; id < N; ++id) {
    Stratum& S = groups[find(id)];
    S.dim = lv[id];
    S.simplices.push_back(F.by_global(id));
  }
  std::vector<Stratum> out;
  for (auto& [root, S] : groups) {
    std::sort(S.simplices.begin(), S.simplices.end());
    S.regular = S.dim == FX.dim();
    out.push_back(std::move(S));
  }
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.simplices.front() < b.simplices.front();
  });
  return out;
}

namespace {

const Simplex* top_simplex(const Stratum& S, const SimplicialComplex* avoid) {
  const Simplex* best = nullptr;
  for (const auto& s : S.simplices)
    if (simplex_dim(s) == S.dim) {
      if (avoid && avoid->contains(s)) {
        if (!best) best = &s;
        continue;
      }
      if (!best || (avoid && avoid->contains(*best))) best = &s;
      if (!avoid) break;
    }
  return best;
}

}  // namespace

FilteredComplex stratum_link(const FilteredComplex& FX, const Stratum& S) {
  if (S.regular) {
    FilteredComplex L;
    L.complex = SimplicialComplex::empty(-1);
    L.name = "empty link";
    return L;
  }
  const Simplex* top = top_simplex(S, FX.boundary ? &*FX.boundary : nullptr);
  if (!top) {
    std::vector<Simplex> prov;
    FilteredComplex sd = subdivide(FX, &prov);
    for (const auto& T : strata_of(sd)) {
      if (T.dim != S.dim) continue;
      const Simplex& first = T.simplices.front();
      if (std::find(S.simplices.begin(), S.simplices.end(), prov[first.back()]) != S.simplices.end()) {
        const Simplex* t2 = top_simplex(T, sd.boundary ? &*sd.boundary : nullptr);
        if (!t2) break;
        FilteredComplex L = link_filtration(sd, *t2);
        L.name += ":subdivided";
        return L;
      }
    }
    throw Error(ErrorKind::NoTopSimplex, "stratum of dimension " + std::to_string(S.dim));
  }
  return link_filtration(FX, *top);
}

namespace {

void add(ValidationReport& R, const std::string& id, const std::string& title, bool pass,
         const std::string& detail = {}) {
  R.clauses.push_back({id, title, pass, detail});
  if (!pass) R.pass = false;
}

}  // namespace

ValidationReport validate(const FilteredComplex& FX, Mode mode, Exec exec) {
  ValidationReport R;
  const SimplicialComplex& K = FX.complex;
  const int n = K.dimension();
  if (K.is_empty()) {
    add(R, "a", "nested subcomplex skeleta", true);
    return R;
  }
  if (static_cast<int>(FX.skeleta.size()) != n + 1)
    throw Error(ErrorKind::MalformedFiltration, "expected " + std::to_string(n + 1) + " skeleta");
  for (int j = 0; j <= n; ++j)
    if (!is_subcomplex(FX.skeleta[j], K))
      throw Error(ErrorKind::MalformedFiltration, "skeleton " + std::to_string(j) + " is not a subcomplex");
  if (FX.skeleta[n] != K) throw Error(ErrorKind::MalformedFiltration, "top skeleton differs from the complex");

  {
    std::string detail;
    bool ok = true;
    for (int j = 1; j <= n && ok; ++j)
      if (!is_subcomplex(FX.skeleta[j - 1], FX.skeleta[j])) {
        ok = false;
        detail = "X^" + std::to_string(j - 1) + " not contained in X^" + std::to_string(j);
      }
    for (int j = 0; j <= n && ok; ++j)
      if (FX.skeleta[j].dimension() > j) {
        ok = false;
        detail = "X^" + std::to_string(j) + " has dimension " + std::to_string(FX.skeleta[j].dimension());
      }
    add(R, "a", "nested subcomplex skeleta", ok, detail);
    if (!ok) return R;
  }
  {
    std::string detail;
    bool ok = K.is_pure();
    if (!ok)
      for (const auto& f : K.facets())
        if (simplex_dim(f) != n) { detail = "facet " + to_string(f) + " of dimension " + std::to_string(simplex_dim(f)); break; }
    add(R, "b", "totally n-dimensional", ok, detail);
  }
  {
    std::string detail;
    bool ok = true;
    for (const auto& f : K.facets())
      if (simplex_dim(f) != n || (n > 0 && FX.skeleta[n - 1].contains(f))) {
        ok = false;
        detail = "simplex " + to_string(f) + " is not a face of a regular facet";
        break;
      }
    add(R, "c", "regular part dense", ok, detail);
  }
  const std::vector<int> lv = FX.level_table();
  const auto& F = K.faces();
  {
    bool ok = true;
    std::string detail;
    if (FX.classical && n >= 1)
      for (int id = 0; id < F.total && ok; ++id)
        if (lv[id] == n - 1) {
          ok = false;
          detail = "simplex " + to_string(F.by_global(id)) + " in a codimension-one stratum";
        }
    add(R, "d", "no codimension-one strata", ok, detail);
  }
  if (!R.pass) return R;

  SimplicialComplex B = boundary_subcomplex(K);
  const bool with_b = mode == Mode::WithBoundary;
  {
    std::vector<std::string> fails(F.total);
    std::vector<char> heur(F.total, 0);
    auto check = [&](int id) {
      const Simplex& s = F.by_global(id);
      const int i = lv[id];
      const int expect = i - simplex_dim(s) - 1;
      const SimplicialComplex Ls = link(FX.skeleton(i), s);
      const bool on_b = with_b && B.contains(s);
      const Recognition r = on_b ? recognize_ball(Ls, expect, true) : recognize_sphere(Ls, expect, true);
      if (r == Recognition::No)
        fails[id] = "link of " + to_string(s) + " in X^" + std::to_string(i) + " is not a " +
                    std::to_string(expect) + (on_b ? "-ball" : "-sphere");
      if (r == Recognition::Heuristic) heur[id] = 1;
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
      for (int id = 0; id < F.total; ++id) check(id);
    } else {
      for (int id = 0; id < F.total; ++id) check(id);
    }
    std::string detail;
    for (int id = 0; id < F.total; ++id) {
      if (heur[id]) R.exact = false;
      if (detail.empty() && !fails[id].empty()) detail = fails[id];
    }
    add(R, "e", "strata are manifolds", detail.empty(), detail);
  }
  {
    std::vector<int> tops;
    for (int id = 0; id < F.total; ++id) {
      const int d = F.dim_of_global(id);
      if (lv[id] < n && d == lv[id]) tops.push_back(id);
    }
    std::vector<std::string> fails(tops.size());
    std::vector<char> heur(tops.size(), 0);
    FilteredComplex FXb = FX;
    if (with_b) FXb.boundary = B;
    auto check = [&](std::size_t t) {
      const Simplex& s = F.by_global(tops[t]);
      try {
        FilteredComplex L = link_filtration(with_b ? FXb : FX, s);
        const bool on_b = with_b && B.contains(s);
        ValidationReport sub = validate(L, on_b ? Mode::WithBoundary : Mode::Closed, Exec::Serial);
        if (!sub.exact) heur[t] = 1;
        if (!sub.pass) {
          const ClauseResult* c = sub.first_failure();
          fails[t] = "link of " + to_string(s) + " fails clause " + c->clause +
                     (c->detail.empty() ? "" : " (" + c->detail + ")");
        }
      } catch (const Error& e) {
        fails[t] = "link of " + to_string(s) + ": " + e.what();
      }
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::size_t t = 0; t < tops.size(); ++t) check(t);
    } else {
      for (std::size_t t = 0; t < tops.size(); ++t) check(t);
    }
    std::string detail;
    for (std::size_t t = 0; t < tops.size(); ++t) {
      if (heur[t]) R.exact = false;
      if (detail.empty() && !fails[t].empty()) detail = fails[t];
    }
    add(R, "f", "links are stratified pseudomanifolds", detail.empty(), detail);
  }
  if (!with_b) {
    add(R, "g", "closed: empty boundary", B.is_empty(),
        B.is_empty() ? std::string() : "boundary ridge " + to_string(B.facets().front()));
  } else {
    std::string detail;
    if (FX.boundary && *FX.boundary != B) detail = "designated boundary differs from the boundary subcomplex";
    if (detail.empty() && !B.is_empty()) {
      FilteredComplex FB;
      FB.complex = B;
      FB.classical = FX.classical;
      const SimplicialComplex x0b = intersection(FX.skeleton(0), B);
      if (!x0b.is_empty()) detail = "X^0 meets the boundary at " + to_string(x0b.facets().front());
      for (int i = 0; i < n - 1 && detail.empty(); ++i) {
        SimplicialComplex part = intersection(FX.skeleton(i + 1), B);
        FB.skeleta.push_back(part.is_empty() ? SimplicialComplex::empty(i) : part);
      }
      if (detail.empty()) {
        FB.skeleta.push_back(B);
        ValidationReport sub = validate(FB, Mode::Closed, exec);
        if (!sub.exact) R.exact = false;
        if (!sub.pass) detail = "induced boundary filtration fails clause " + sub.first_failure()->clause + " (" + sub.first_failure()->detail + ")";
      }
      if (detail.empty()) {
        for (const auto& byd : B.faces().by_dim) {
          for (const auto& s : byd) {
            const SimplicialComplex lk = link(K, s);
            const SimplicialComplex lkb = link(B, s);
            if (!lk.is_pure() || boundary_subcomplex(lk) != lkb || !is_acyclic(lk)) {
              detail = "no collar cone structure at " + to_string(s);
              break;
            }
          }
          if (!detail.empty()) break;
        }
      }
    }
    add(R, "g", "boundary filtration and collar", detail.empty(), detail);
  }
  for (const auto& S : strata_of(FX))
    if (!S.regular) ++R.singular_strata;
  return R;
}

bool coarsens(const FilteredComplex& coarse, const FilteredComplex& fine) {
  if (coarse.complex != fine.complex) throw Error(ErrorKind::DifferentCarrier, "coarsening comparison");
  const auto& F = coarse.complex.faces();
  std::vector<int> owner(F.total, -1);
  const auto cs = strata_of(coarse);
  for (std::size_t k = 0; k < cs.size(); ++k)
    for (const auto& s : cs[k].simplices) owner[F.global_id(s)] = static_cast<int>(k);
  for (const auto& S : strata_of(fine)) {
    const int o = owner[F.global_id(S.simplices.front())];
    for (const auto& s : S.simplices)
      if (owner[F.global_id(s)] != o) return false;
  }
  return true;
}

FilteredComplex subdivide(const FilteredComplex& FX, std::vector<Simplex>* provenance) {
  SubdivisionResult sd = barycentric_subdivision(FX.complex);
  const std::vector<int> lv = FX.level_table();
  const auto& F2 = sd.complex.faces();
  std::vector<int> lv2(F2.total, 0);
  const auto& F = FX.complex.faces();
  for (int id = 0; id < F2.total; ++id) {
    const Simplex& chain = F2.by_global(id);
    lv2[id] = lv[F.global_id(sd.provenance[chain.back()])];
  }
  FilteredComplex out = FilteredComplex::from_levels(sd.complex, lv2, FX.name + ":sd");
  out.classical = FX.classical;
  out.heuristic = FX.heuristic;
  if (FX.boundary && !FX.boundary->is_empty()) {
    std::vector<Simplex> fs;
    for (const auto& f : sd.complex.faces().by_dim[std::max(0, FX.dim() - 1)]) {
      const Simplex& top = sd.provenance[f.back()];
      if (FX.boundary->contains(top)) fs.push_back(f);
    }
    out.boundary = SimplicialComplex::from_facets(std::move(fs), true);
  }
  if (FX.orientation) {
    Orientation o;
    for (const auto& f : sd.complex.facets()) {
      const Simplex& top = sd.provenance[f.back()];
      std::vector<Vertex> seq;
      for (std::size_t k = 0; k < f.size(); ++k) {
        const Simplex& face = sd.provenance[f[k]];
        const Simplex prev = k ? sd.provenance[f[k - 1]] : Simplex{};
        seq.push_back(simplex_minus(face, prev).front());
      }
      o.sign[f] = FX.orientation->at(top) * permutation_sign(seq);
    }
    out.orientation = std::move(o);
  }
  if (provenance) *provenance = sd.provenance;
  return out;
}

bool is_full(const FilteredComplex& FX) {
  for (const auto& S : FX.skeleta)
    if (!S.is_empty() && !is_full_subcomplex(S, FX.complex)) return false;
  return true;
}

std::string link_invariant(const FilteredComplex& L) {
  std::ostringstream os;
  os << "d" << L.dim() << "{";
  for (const auto& g : homology(L.complex, Ring::integers(), false, Exec::Serial)) {
    os << g.rank;
    for (const auto& t : g.torsion) os << "t" << t;
    os << ",";
  }
  os << "}";
  std::vector<std::string> subs;
  if (!L.complex.is_empty())
    for (const auto& S : strata_of(L))
      if (!S.regular) subs.push_back(std::to_string(S.dim) + ":" + link_invariant(stratum_link(L, S)));
  std::sort(subs.begin(), subs.end());
  os << "[";
  for (const auto& s : subs) os << s << ";";
  os << "]";
  return os.str();
}

Orientation extend_orientation_to_intrinsic(const FilteredComplex& FX) {
  if (!FX.classical) throw Error(ErrorKind::NotClassical, "orientation extension needs a classical filtration");
  if (!FX.orientation) throw Error(ErrorKind::IncompatibleOrientations, "no orientation supplied");
  const SimplicialComplex& K = FX.complex;
  const FilteredComplex star = intrinsic_stratification(K);
  const int n = K.dimension();
  const auto& fs = K.facets();
  std::unordered_map<Simplex, std::vector<std::pair<int, int>>, SimplexHash> by_ridge;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t k = 0; k < fs[i].size(); ++k) {
      Simplex r = fs[i];
      r.erase(r.begin() + k);
      if (!r.empty() && star.skeleton(n - 2).contains(r)) continue;
      by_ridge[r].emplace_back(static_cast<int>(i), static_cast<int>(k));
    }
  std::vector<std::vector<std::tuple<int, int, int>>> adj(fs.size());
  for (auto& [r, lst] : by_ridge)
    if (lst.size() == 2) {
      adj[lst[0].first].emplace_back(lst[1].first, lst[0].second, lst[1].second);
      adj[lst[1].first].emplace_back(lst[0].first, lst[1].second, lst[0].second);
    }
  std::vector<int> sign(fs.size(), 0);
  const int regular_level = n;
  std::queue<int> q;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const int s = FX.orientation->at(fs[i]);
    if (s != 0 && FX.level(fs[i]) == regular_level) {
      sign[i] = s;
      q.push(static_cast<int>(i));
    }
  }
  while (!q.empty()) {
    const int a = q.front();
    q.pop();
    for (auto [b, ka, kb] : adj[a]) {
      const int want = -induced_sign(sign[a], ka) * ((kb % 2 == 0) ? 1 : -1);
      if (sign[b] == 0) {
        sign[b] = want;
        q.push(b);
      } else if (sign[b] != want) {
        throw Error(ErrorKind::IncompatibleOrientations, "facet signs disagree across ridge at " + to_string(fs[b]));
      }
    }
  }
  Orientation o;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (sign[i] == 0) throw Error(ErrorKind::IncompatibleOrientations, "component without a signed facet");
    o.sign[fs[i]] = sign[i];
  }
  return o;
}

LinkDecomposition polyhedral_link_decomposition(const FilteredComplex& FX, const Simplex& sigma) {
  const SimplicialComplex& K = FX.complex;
  if (!K.contains(sigma)) throw Error(ErrorKind::SimplexNotFound, to_string(sigma));
  const SimplicialComplex B = boundary_subcomplex(K);
  if (B.contains(sigma)) throw Error(ErrorKind::BoundaryPoint, to_string(sigma));
  const IntrinsicData D = intrinsic_data(K, Exec::Serial);
  LinkDecomposition r;
  r.j = D.jint(sigma);
  r.core = D.core_complex(sigma);
  r.heuristic = D.heuristic[K.faces().global_id(sigma)] != 0;
  SimplicialComplex bd;
  if (sigma.size() >= 2) {
    std::vector<Simplex> fs;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      Simplex f = sigma;
      f.erase(f.begin() + k);
      fs.push_back(f);
    }
    bd = SimplicialComplex::from_facets(std::move(fs));
  } else {
    bd = SimplicialComplex::empty(-1);
  }
  const SimplicialComplex sd_bd = bd.is_empty() ? bd : barycentric_subdivision(bd).complex;
  const SimplicialComplex lk = link(K, sigma);
  const SimplicialComplex sd_lk = lk.is_empty() ? lk : barycentric_subdivision(lk).complex;
  const SimplicialComplex actual = join(sd_bd, sd_lk).complex;
  const SimplicialComplex model = suspension_power(r.core, r.j);
  const SimplicialComplex sd_model = model.is_empty() ? model : barycentric_subdivision(model).complex;
  r.reconstruction_isomorphic = isomorphic(sd_model, actual).has_value();
  return r;
}

}  // namespace strata
