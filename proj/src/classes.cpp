#include "strata/classes.hpp"

#include <algorithm>
#include <exception>
#include <map>

namespace strata {

namespace {

std::string ring_tag(const Ring& r) { return r.name(); }

ClassVerdict fail(std::string condition, std::string value, const SimplicialComplex& L) {
  ClassVerdict v;
  v.member = false;
  v.witnesses.push_back({"candidate", std::move(condition), std::move(value), L});
  return v;
}

struct IHOfLink {
  std::vector<IHGroup> groups;
  bool heuristic = false;
};

IHOfLink ih_of(const SimplicialComplex& L, const Ring& ring) {
  const FilteredComplex FX = intrinsic_stratification(L, Exec::Serial);
  return {intersection_homology(FX, lower_middle(L.dimension()), ring, Exec::Serial), FX.heuristic};
}

std::string group_text(const IHGroup& g) {
  std::string s = "rank " + std::to_string(g.rank);
  if (!g.torsion.empty()) {
    s += " torsion {";
    for (std::size_t i = 0; i < g.torsion.size(); ++i) s += (i ? "," : "") + g.torsion[i].str();
    s += "}";
  }
  return s;
}

bool zero_dim_nonempty(const SimplicialComplex& L) { return !L.is_empty() && L.dimension() == 0; }

/// IH_k(L; ring) vanishes (rank and torsion).
bool vanishes(const IHOfLink& ih, int k, ClassVerdict& v, const SimplicialComplex& L, const Ring& ring) {
  const IHGroup& g = ih.groups.at(k);
  if (g.rank == 0 && g.torsion.empty()) return true;
  v.member = false;
  v.witnesses.push_back({"candidate", "IH_" + std::to_string(k) + "(L;" + ring_tag(ring) + ") = 0", group_text(g), L});
  return false;
}

ClassVerdict witt(const SimplicialComplex& L, const Ring& F) {
  if (L.is_empty()) return {};
  if (zero_dim_nonempty(L)) return fail("dim L > 0", "0", L);
  const int m = L.dimension();
  if (m % 2 == 1) return {};
  const IHOfLink ih = ih_of(L, F);
  ClassVerdict v;
  v.heuristic = ih.heuristic;
  vanishes(ih, m / 2, v, L, F);
  return v;
}

ClassVerdict ip(const SimplicialComplex& L) {
  if (L.is_empty()) return {};
  if (zero_dim_nonempty(L)) return fail("dim L > 0", "0", L);
  const int m = L.dimension();
  const Ring Z = Ring::integers();
  const IHOfLink ih = ih_of(L, Z);
  ClassVerdict v;
  v.heuristic = ih.heuristic;
  if (m % 2 == 0) {
    vanishes(ih, m / 2, v, L, Z);
  } else {
    const IHGroup& g = ih.groups.at((m - 1) / 2);
    if (!g.torsion.empty()) {
      v.member = false;
      std::string t = "{";
      for (std::size_t i = 0; i < g.torsion.size(); ++i) t += (i ? "," : "") + g.torsion[i].str();
      v.witnesses.push_back({"candidate", "torsion IH_" + std::to_string((m - 1) / 2) + "(L;Z) = 0", t + "}", L});
    }
  }
  return v;
}

ClassVerdict euler2(const SimplicialComplex& L) {
  if (L.is_empty()) return {};
  if (zero_dim_nonempty(L)) return fail("dim L > 0", "0", L);
  const int chi = euler_characteristic(L);
  if (chi % 2 != 0) return fail("chi(L) even", std::to_string(chi), L);
  return {};
}

ClassVerdict orientable(const SimplicialComplex& L) {
  if (L.is_empty()) return {};
  if (zero_dim_nonempty(L)) return fail("dim L > 0", "0", L);
  if (!orient(L).orientable) return fail("L orientable", "non-orientable", L);
  return {};
}

ClassVerdict s_duality(const SimplicialComplex& L) {
  if (L.is_empty()) return {};
  if (zero_dim_nonempty(L)) return fail("dim L > 0", "0", L);
  const int m = L.dimension();
  ClassVerdict v;
  if (m <= 3) {
    const Recognition r = recognize_sphere(L, m);
    if (r == Recognition::No) return fail("L is a sphere", "not a " + std::to_string(m) + "-sphere", L);
    if (r == Recognition::Heuristic) v.heuristic = true;
  }
  const Ring F2 = Ring::prime_field(2);
  if (m % 2 == 0) {
    const IHOfLink ih = ih_of(L, F2);
    v.heuristic = v.heuristic || ih.heuristic;
    vanishes(ih, m / 2, v, L, F2);
  } else if (m > 1) {
    const int k = (m + 1) / 2;
    const IHOfLink ih = ih_of(L, F2);
    v.heuristic = v.heuristic || ih.heuristic;
    if (vanishes(ih, k, v, L, F2)) vanishes(ih, k - 1, v, L, F2);
  }
  return v;
}

ClassVerdict suspensions(const SimplicialComplex& L) {
  if (L.is_empty()) return {};
  if (L.dimension() == 0) return fail("dim L > 0", "0", L);
  const auto [core, pairs] = strip_literal_suspensions(L);
  if (pairs > 0) return {};
  const IntrinsicData D = intrinsic_data(L, Exec::Serial);
  ClassVerdict v;
  v.heuristic = D.heuristic_whole;
  if (D.J_whole < 1) return fail("L is a suspension", "no desuspension found", L);
  return v;
}

ClassVerdict both(const ClassVerdict& a, const ClassVerdict& b) {
  ClassVerdict v = a;
  v.member = a.member && b.member;
  v.heuristic = a.heuristic || b.heuristic;
  v.witnesses.insert(v.witnesses.end(), b.witnesses.begin(), b.witnesses.end());
  return v;
}

SingularityClass make(std::string name, std::function<ClassVerdict(const SimplicialComplex&)> f) {
  SingularityClass c;
  c.name = std::move(name);
  c.test = std::move(f);
  return c;
}

}  // namespace

SingularityClass builtin(const std::string& raw) {
  std::string name = raw;
  std::replace(name.begin(), name.end(), '(', ':');
  name.erase(std::remove(name.begin(), name.end(), ')'), name.end());
  if (name.rfind("g:", 0) == 0) return g_of_e(builtin(name.substr(2)));
  if (name.rfind("siegel:", 0) == 0) return siegel_class(builtin(name.substr(7)));
  if (name == "witt" || name.rfind("witt:", 0) == 0) {
    const Ring F = name == "witt" ? Ring::rationals() : Ring::parse(name.substr(5));
    if (!F.is_field()) throw Error(ErrorKind::UnsupportedCoefficients, "Witt class needs a field, got " + F.name());
    return make("witt:" + F.name(), [F](const SimplicialComplex& L) { return witt(L, F); });
  }
  if (name.rfind("loc-orient-witt", 0) == 0 || name.rfind("locally_orientable_witt", 0) == 0) {
    const auto colon = name.find(':');
    const Ring F = colon == std::string::npos ? Ring::prime_field(2) : Ring::parse(name.substr(colon + 1));
    if (!F.is_field()) throw Error(ErrorKind::UnsupportedCoefficients, "Witt class needs a field, got " + F.name());
    return make("loc-orient-witt:" + F.name(),
                [F](const SimplicialComplex& L) { return both(orientable(L), witt(L, F)); });
  }
  if (name == "ip" || name == "ip:Z") return make("ip", ip);
  if (name.rfind("ip:", 0) == 0) throw Error(ErrorKind::UnsupportedCoefficients, "IP class is defined over Z");
  if (name == "euler2") return make("euler2", euler2);
  if (name == "loc-orient" || name == "locally_orientable") return make("loc-orient", orientable);
  if (name == "s-duality" || name == "s_duality") return make("s-duality", s_duality);
  if (name == "lsf-partial" || name == "lsf_partial")
    return make("lsf-partial", [](const SimplicialComplex& L) { return witt(L, Ring::prime_field(2)); });
  if (name == "all" || name == "all_pseudomanifolds")
    return make("all", [](const SimplicialComplex& L) {
      return zero_dim_nonempty(L) ? fail("dim L > 0", "0", L) : ClassVerdict{};
    });
  if (name == "suspensions") return make("suspensions", suspensions);
  throw Error(ErrorKind::UnknownName, "unknown class '" + raw + "'");
}

std::vector<std::string> builtin_names() {
  return {"witt:Q", "witt:F2", "ip", "euler2", "loc-orient", "loc-orient-witt:F2", "s-duality", "lsf-partial", "all",
          "suspensions"};
}

std::pair<SimplicialComplex, int> strip_literal_suspensions(const SimplicialComplex& K) {
  SimplicialComplex Z = K;
  int pairs = 0;
  while (!Z.is_empty()) {
    bool found = false;
    const auto& fs = Z.facets();
    for (Vertex a : Z.vertices()) {
      std::vector<const Simplex*> rest;
      for (const auto& f : fs)
        if (!std::binary_search(f.begin(), f.end(), a)) rest.push_back(&f);
      if (rest.empty()) continue;
      Simplex common = *rest.front();
      for (const Simplex* f : rest) {
        Simplex t;
        std::set_intersection(common.begin(), common.end(), f->begin(), f->end(), std::back_inserter(t));
        common = std::move(t);
      }
      for (Vertex b : common) {
        if (Z.contains({std::min(a, b), std::max(a, b)})) continue;
        const SimplicialComplex la = link(Z, {a});
        if (la == link(Z, {b})) {
          Z = la.is_empty() ? SimplicialComplex::empty(-1) : la;
          ++pairs;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }
  return {Z, pairs};
}

ClassVerdict g_of_e_membership(const SimplicialComplex& K, const SingularityClass& E) {
  ClassVerdict v;
  if (K.is_empty()) return v;
  const auto [Z, pairs] = strip_literal_suspensions(K);
  if (Z.is_empty()) return v;
  SimplicialComplex core = Z;
  if (Z.dimension() > 0) {
    const IntrinsicData D = intrinsic_data(Z, Exec::Serial);
    v.heuristic = D.heuristic_whole;
    core = D.core_of_whole();
  }
  if (core.is_empty()) return v;
  ClassVerdict e = E.test(core);
  e.heuristic = e.heuristic || v.heuristic;
  for (auto& w : e.witnesses) w.location = "desuspension core";
  return e;
}

SingularityClass g_of_e(const SingularityClass& E) {
  if (E.kind != ClassKind::E) throw Error(ErrorKind::KindMismatch, E.name + " is not an E-class");
  SingularityClass G;
  G.name = "g:" + E.name;
  G.kind = ClassKind::G;
  G.desuspension_closed = true;
  G.test = [E](const SimplicialComplex& K) { return g_of_e_membership(K, E); };
  return G;
}

SingularityClass e_of_g(const SingularityClass& G) {
  if (G.kind == ClassKind::E) throw Error(ErrorKind::KindMismatch, G.name + " is not a G-class");
  SingularityClass E;
  E.name = "e:" + G.name;
  E.kind = ClassKind::E;
  E.test = [G](const SimplicialComplex& L) {
    if (zero_dim_nonempty(L)) return fail("dim L > 0", "0", L);
    return G.test(L);
  };
  return E;
}

SingularityClass siegel_class(const SingularityClass& E) {
  if (E.kind != ClassKind::E) throw Error(ErrorKind::KindMismatch, E.name + " is not an E-class");
  SingularityClass S;
  S.name = "siegel:" + E.name;
  S.kind = ClassKind::Siegel;
  S.desuspension_closed = true;
  S.test = [E](const SimplicialComplex& K) { return siegel_membership(K, E); };
  return S;
}

ClassVerdict links_in_class(const FilteredComplex& FX, const SingularityClass& E, Exec exec) {
  if (!FX.complex.is_empty() && static_cast<int>(FX.skeleta.size()) != FX.dim() + 1)
    throw Error(ErrorKind::NotValidated, "filtration has the wrong number of skeleta");
  ClassVerdict v;
  v.heuristic = FX.heuristic;
  if (FX.complex.is_empty()) return v;
  std::vector<Stratum> singular;
  for (auto& S : strata_of(FX))
    if (!S.regular) singular.push_back(std::move(S));
  std::vector<ClassVerdict> parts(singular.size());
  std::exception_ptr err;
  auto work = [&](std::size_t i) {
    const FilteredComplex L = stratum_link(FX, singular[i]);
    parts[i] = E.test(L.complex);
    for (auto& w : parts[i].witnesses)
      w.location = "stratum " + std::to_string(singular[i].dim) + " at " + to_string(singular[i].simplices.front());
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < singular.size(); ++i) {
      try {
        work(i);
      } catch (...) {
#pragma omp critical(strata_links_err)
        if (!err) err = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < singular.size(); ++i) work(i);
  }
  if (err) std::rethrow_exception(err);
  for (const auto& p : parts) v = both(v, p);
  return v;
}

ClassVerdict siegel_membership(const SimplicialComplex& K, const SingularityClass& E) {
  ClassVerdict v;
  if (K.is_empty()) return v;
  auto clause = [&](const std::string& id, const std::string& title, const ClassVerdict& c) {
    v.clauses.push_back({id, title, c.member, c.witnesses.empty() ? std::string() : c.witnesses.front().condition});
    v = both(v, c);
  };
  const SimplicialComplex B = boundary_subcomplex(K);
  clause("1", "boundaryless", B.is_empty() ? ClassVerdict{} : fail("boundary empty", "nonempty", K));
  const int n = K.dimension();
  if (n == 0) {
    clause("2", "0-dimensional members are S0",
           K.vertices().size() == 2 ? ClassVerdict{} : fail("K is S0", std::to_string(K.vertices().size()) + " points", K));
    clause("3", "positive-dimensional members lie in E", {});
    clause("4", "intrinsic links lie in E", {});
    return v;
  }
  clause("2", "0-dimensional members are S0", {});
  clause("3", "positive-dimensional members lie in E", E.test(K));
  clause("4", "intrinsic links lie in E", links_in_class(intrinsic_stratification(K, Exec::Serial), E, Exec::Serial));
  return v;
}

ClassVerdict polyhedral_links_in(const SimplicialComplex& K, const SingularityClass& G, Exec exec) {
  ClassVerdict v;
  if (K.is_empty()) return v;
  const SimplicialComplex B = boundary_subcomplex(K);
  const auto& F = K.faces();
  struct Group {
    int dim;
    SimplicialComplex link;
    std::vector<int> faces;
  };
  std::vector<Group> groups;
  std::map<std::pair<int, std::vector<std::size_t>>, std::vector<int>> buckets;
  for (int id = 0; id < F.total; ++id) {
    const Simplex& s = F.by_global(id);
    if (B.contains(s)) continue;
    SimplicialComplex lk = link(K, s);
    std::vector<std::size_t> key = lk.f_vector();
    std::vector<std::size_t> degrees;
    for (Vertex u : lk.vertices()) degrees.push_back(lk.faces().vertex_facets.at(u).size());
    std::sort(degrees.begin(), degrees.end());
    key.push_back(0);
    key.insert(key.end(), degrees.begin(), degrees.end());
    auto& bucket = buckets[{simplex_dim(s), key}];
    int hit = -1;
    for (int g : bucket)
      if (isomorphic(groups[g].link, lk)) {
        hit = g;
        break;
      }
    if (hit < 0) {
      hit = static_cast<int>(groups.size());
      groups.push_back({simplex_dim(s), std::move(lk), {}});
      bucket.push_back(hit);
    }
    groups[hit].faces.push_back(id);
  }
  std::vector<ClassVerdict> parts(groups.size());
  std::exception_ptr err;
  auto work = [&](std::size_t g) {
    parts[g] = G.test(suspension_power(groups[g].link, groups[g].dim));
    const std::string where = "face " + to_string(F.by_global(groups[g].faces.front()));
    for (auto& w : parts[g].witnesses) w.location = where + ": " + w.location;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t g = 0; g < groups.size(); ++g) {
      try {
        work(g);
      } catch (...) {
#pragma omp critical(strata_poly_err)
        if (!err) err = std::current_exception();
      }
    }
  } else {
    for (std::size_t g = 0; g < groups.size(); ++g) work(g);
  }
  if (err) std::rethrow_exception(err);
  for (const auto& p : parts) v = both(v, p);
  return v;
}

ClassVerdict f_membership(const SimplicialComplex& K, const SingularityClass& E, Route via, Exec exec) {
  if (via == Route::Stratified) return links_in_class(intrinsic_with_boundary(K, exec), E, exec);
  return polyhedral_links_in(K, g_of_e(E), exec);
}

}  // namespace strata
