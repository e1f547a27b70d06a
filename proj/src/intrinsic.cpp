#include <algorithm>
#include <exception>
#include <sstream>

#include "strata/strat.hpp"

namespace strata {

int IntrinsicData::J_of(const Simplex& s) const {
  if (s.empty()) return J_whole;
  const int id = complex.faces().global_id(s);
  if (id < 0) throw Error(ErrorKind::SimplexNotFound, to_string(s));
  return J[id];
}

int IntrinsicData::jint(const Simplex& s) const { return simplex_dim(s) + J_of(s); }

SimplicialComplex IntrinsicData::core_complex(const Simplex& s) const {
  if (s.empty()) return core_of_whole();
  const int id = complex.faces().global_id(s);
  if (id < 0) throw Error(ErrorKind::SimplexNotFound, to_string(s));
  if (core[id] == kSphere) return SimplicialComplex::empty(-1);
  return link(complex, complex.faces().by_global(core[id]));
}

SimplicialComplex IntrinsicData::core_of_whole() const {
  if (core_whole == kSphere) return SimplicialComplex::empty(-1);
  if (core_whole == kWhole) return complex;
  return link(complex, complex.faces().by_global(core_whole));
}

namespace {

std::string homology_key(const SimplicialComplex& L) {
  std::ostringstream os;
  os << L.dimension() << ":";
  for (const auto& g : homology(L, Ring::integers(), true, Exec::Serial)) {
    os << g.degree << "=" << g.rank;
    for (const auto& t : g.torsion) os << "/" << t;
    os << ";";
  }
  return os.str();
}

/// Reduced homology by degree, with degrees shifted by `shift`.
std::map<int, std::pair<std::size_t, std::vector<BigInt>>> reduced_table(const SimplicialComplex& L, int shift) {
  std::map<int, std::pair<std::size_t, std::vector<BigInt>>> m;
  for (const auto& g : homology(L, Ring::integers(), true, Exec::Serial))
    if (g.rank != 0 || !g.torsion.empty()) m[g.degree + shift] = {g.rank, g.torsion};
  return m;
}

bool is_literal_join(const SimplicialComplex& L, const SimplicialComplex& A, const SimplicialComplex& C) {
  if (A.is_empty() || C.is_empty()) return false;
  for (Vertex v : A.vertices())
    if (C.contains_vertex(v)) return false;
  std::vector<Simplex> fs;
  for (const auto& a : A.facets())
    for (const auto& c : C.facets()) fs.push_back(simplex_union(a, c));
  return SimplicialComplex::from_facets(std::move(fs)) == L;
}

struct FaceResult {
  int J = 0;
  int core = 0;
  bool heuristic = false;
};

/// `self` is the core id meaning "the link itself".
FaceResult analyse_link(const SimplicialComplex& K, const Simplex& rho, const SimplicialComplex& L, int self,
                        const std::vector<int>& J, const std::vector<int>& core, const std::vector<char>& heur) {
  FaceResult r;
  if (L.is_empty()) {
    r.core = IntrinsicData::kSphere;
    return r;
  }
  const auto& FK = K.faces();
  const auto& FL = L.faces();
  const int m = L.dimension();
  std::vector<int> jl(FL.total);
  std::vector<int> cid(FL.total);
  for (int id = 0; id < FL.total; ++id) {
    const Simplex& tau = FL.by_global(id);
    cid[id] = FK.global_id(simplex_union(rho, tau));
    jl[id] = simplex_dim(tau) + J[cid[id]];
    if (heur[cid[id]]) r.heuristic = true;
  }
  const int d = *std::min_element(jl.begin(), jl.end());
  if (d >= m) {
    const Recognition rec = L.is_pure() ? recognize_sphere(L, m) : Recognition::No;
    if (rec == Recognition::No) {
      r.core = self;
      return r;
    }
    if (rec == Recognition::Heuristic) r.heuristic = true;
    r.J = m + 1;
    r.core = IntrinsicData::kSphere;
    return r;
  }
  std::vector<Simplex> gens;
  for (int id = 0; id < FL.total; ++id)
    if (jl[id] == d) gens.push_back(FL.by_global(id));
  const SimplicialComplex B = SimplicialComplex::generated(gens);
  auto fail = [&] {
    r.J = 0;
    r.core = self;
    return r;
  };
  if (static_cast<int>(gens.size()) != B.faces().total) return fail();
  if (!B.is_pure() || B.dimension() != d || !is_homology_sphere(B, d)) return fail();
  const Simplex* tau0 = nullptr;
  std::string key0;
  for (const auto& tau : B.facets()) {
    const std::string key = homology_key(link(L, tau));
    if (!tau0) {
      tau0 = &tau;
      key0 = key;
    } else if (key != key0) {
      return fail();
    }
  }
  const SimplicialComplex ell = link(L, *tau0);
  if (reduced_table(L, 0) != reduced_table(ell, d + 1)) return fail();
  r.J = d + 1;
  const int c0 = FK.global_id(simplex_union(rho, *tau0));
  r.core = core[c0];
  if (!is_literal_join(L, B, ell)) r.heuristic = true;
  return r;
}

}  // namespace

IntrinsicData intrinsic_data(const SimplicialComplex& K, Exec exec, const SimplicialComplex* boundary) {
  IntrinsicData D;
  D.complex = K;
  const auto& F = K.faces();
  D.J.assign(F.total, 0);
  D.core.assign(F.total, IntrinsicData::kSphere);
  D.heuristic.assign(F.total, 0);
  std::optional<IntrinsicData> DB;
  if (boundary && !boundary->is_empty()) DB = intrinsic_data(*boundary, exec);
  for (int dim = K.dimension(); dim >= 0; --dim) {
    const int count = static_cast<int>(F.by_dim[dim].size());
    std::exception_ptr err;
    auto work = [&](int i) {
      const int id = F.offset[dim] + i;
      const Simplex& rho = F.by_dim[dim][i];
      if (DB && boundary->contains(rho)) {
        const int bid = DB->complex.faces().global_id(rho);
        D.J[id] = DB->J[bid] + 1;
        D.core[id] = id;
        D.heuristic[id] = DB->heuristic[bid];
        return;
      }
      const FaceResult fr = analyse_link(K, rho, link(K, rho), id, D.J, D.core, D.heuristic);
      D.J[id] = fr.J;
      D.core[id] = fr.core;
      D.heuristic[id] = fr.heuristic ? 1 : 0;
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (int i = 0; i < count; ++i) {
        try {
          work(i);
        } catch (...) {
#pragma omp critical(strata_intrinsic_err)
          if (!err) err = std::current_exception();
        }
      }
    } else {
      for (int i = 0; i < count; ++i) work(i);
    }
    if (err) std::rethrow_exception(err);
  }
  if (!K.is_empty()) {
    const FaceResult fr = analyse_link(K, {}, K, IntrinsicData::kWhole, D.J, D.core, D.heuristic);
    D.J_whole = fr.J;
    D.core_whole = fr.core;
    D.heuristic_whole = fr.heuristic;
  } else {
    D.J_whole = 0;
    D.core_whole = IntrinsicData::kSphere;
  }
  D.any_heuristic = D.heuristic_whole;
  for (char h : D.heuristic)
    if (h) D.any_heuristic = true;
  return D;
}

FilteredComplex intrinsic_from_data(const IntrinsicData& D, std::string name) {
  const SimplicialComplex& K = D.complex;
  const auto& F = K.faces();
  const int n = K.dimension();
  std::vector<int> lv(F.total);
  for (int id = 0; id < F.total; ++id) lv[id] = std::min(n, F.dim_of_global(id) + D.J[id]);
  bool changed = false;
  for (int d = n; d >= 1; --d)
    for (std::size_t i = 0; i < F.by_dim[d].size(); ++i) {
      const int id = F.offset[d] + static_cast<int>(i);
      const Simplex& s = F.by_dim[d][i];
      for (std::size_t k = 0; k < s.size(); ++k) {
        Simplex f = s;
        f.erase(f.begin() + k);
        const int fid = F.global_id(f);
        if (lv[fid] > lv[id]) {
          lv[fid] = lv[id];
          changed = true;
        }
      }
    }
  FilteredComplex FX = FilteredComplex::from_levels(K, lv, std::move(name));
  FX.heuristic = D.any_heuristic || changed;
  return FX;
}

FilteredComplex intrinsic_stratification(const SimplicialComplex& K, Exec exec) {
  return intrinsic_from_data(intrinsic_data(K, exec), "intrinsic");
}

FilteredComplex intrinsic_with_boundary(const SimplicialComplex& K, Exec exec) {
  const SimplicialComplex B = boundary_subcomplex(K);
  FilteredComplex FX = intrinsic_from_data(intrinsic_data(K, exec, &B), "intrinsic");
  FX.boundary = B;
  return FX;
}

}  // namespace strata
