#include "strata/catalog.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>

#include "strata/bordism.hpp"

namespace strata::catalog {

SimplicialComplex sphere(int n) {
  Simplex top;
  for (Vertex v = 0; v <= n + 1; ++v) top.push_back(v);
  std::vector<Simplex> fs;
  for (std::size_t k = 0; k < top.size(); ++k) {
    Simplex f = top;
    f.erase(f.begin() + k);
    fs.push_back(f);
  }
  return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex circle(int m) {
  std::vector<Simplex> fs;
  for (Vertex i = 0; i < m; ++i) fs.push_back({std::min(i, (i + 1) % m), std::max(i, (i + 1) % m)});
  return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex torus7() {
  std::vector<Simplex> fs;
  for (Vertex i = 0; i < 7; ++i) {
    Simplex a{i, (i + 1) % 7, (i + 3) % 7}, b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    fs.push_back(a);
    fs.push_back(b);
  }
  return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex rp2_6() {
  std::vector<Simplex> fs = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                             {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
  for (auto& f : fs)
    for (auto& v : f) --v;
  return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex rp3_11() {
  return SimplicialComplex::from_facets(
      {{0, 1, 4, 6},  {0, 1, 4, 7},  {0, 1, 6, 10}, {0, 1, 7, 8},  {0, 1, 8, 10}, {0, 2, 3, 5},  {0, 2, 3, 10},
       {0, 2, 5, 6},  {0, 2, 6, 10}, {0, 3, 5, 9},  {0, 3, 7, 8},  {0, 3, 7, 9},  {0, 3, 8, 10}, {0, 4, 5, 6},
       {0, 4, 5, 9},  {0, 4, 7, 9},  {1, 2, 3, 4},  {1, 2, 3, 5},  {1, 2, 4, 7},  {1, 2, 5, 8},  {1, 2, 7, 8},
       {1, 3, 4, 6},  {1, 3, 5, 9},  {1, 3, 6, 9},  {1, 5, 8, 9},  {1, 6, 9, 10}, {1, 8, 9, 10}, {2, 3, 4, 10},
       {2, 4, 7, 10}, {2, 5, 6, 8},  {2, 6, 7, 8},  {2, 6, 7, 10}, {3, 4, 6, 8},  {3, 4, 8, 10}, {3, 6, 7, 8},
       {3, 6, 7, 9},  {4, 5, 6, 8},  {4, 5, 8, 9},  {4, 7, 9, 10}, {4, 8, 9, 10}, {6, 7, 9, 10}});
}

SimplicialComplex torus3() {
  const SimplicialComplex c = circle(3);
  return product(c, product(c, c).complex).complex;
}

FilteredComplex refine_with_point(const FilteredComplex& FX) {
  const SimplicialComplex& K = FX.complex;
  const int n = FX.dim();
  const std::vector<int> lv0 = FX.level_table();
  std::vector<int> lv = lv0;
  const auto& F = K.faces();
  for (Vertex v : K.vertices()) {
    const int id = F.global_id({v});
    if (lv[id] != n || (FX.boundary && FX.boundary->contains_vertex(v))) continue;
    lv[id] = 0;
    FilteredComplex out = FilteredComplex::from_levels(K, lv, FX.name.empty() ? "refined" : FX.name + "+pt");
    out.boundary = FX.boundary;
    out.classical = FX.classical;
    out.orientation = FX.orientation;
    out.heuristic = FX.heuristic;
    return out;
  }
  throw Error(ErrorKind::InvariantBreach, "no regular interior vertex to refine at");
}

namespace {

using Table = std::vector<std::pair<std::size_t, std::vector<int>>>;

std::vector<HomologyGroup> table(const Table& t) {
  std::vector<HomologyGroup> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    HomologyGroup g;
    g.degree = static_cast<int>(i);
    g.rank = t[i].first;
    for (int q : t[i].second) g.torsion.emplace_back(q);
    out.push_back(std::move(g));
  }
  return out;
}

struct Recipe {
  std::string name;
  std::string description;
  std::function<SimplicialComplex()> build;
  bool closed;
  int euler;
  Table homology;
  bool orientable;
  std::map<std::string, bool> verdicts;
  /// Custom stratifications; empty uses intrinsic plus refine_with_point when classical refinement exists.
  std::function<std::vector<FilteredComplex>(const SimplicialComplex&)> strata = nullptr;
};

std::map<std::string, bool> closed_verdicts(bool witt, bool ip, bool euler2, bool loc) {
  return {{"witt:Q", witt}, {"ip", ip}, {"euler2", euler2}, {"loc-orient", loc}};
}

const std::map<std::string, bool> kAll = closed_verdicts(true, true, true, true);

SimplicialComplex susp(const SimplicialComplex& K) { return suspension(K).complex; }
SimplicialComplex interval_times(const SimplicialComplex& K) {
  return product(SimplicialComplex::from_facets({{0, 1}}), K).complex;
}

/// I × X with the product stratifications of X's intrinsic and refined stratifications.
std::vector<FilteredComplex> cylinder_strata(const SimplicialComplex& X) {
  FilteredComplex I = intrinsic_stratification(X);
  I.name = "intrinsic";
  FilteredComplex a = cylinder(I).Y;
  a.name = "intrinsic";
  FilteredComplex b = cylinder(refine_with_point(I)).Y;
  b.name = "refined";
  return {a, b};
}

const std::vector<Recipe>& recipes() {
  static const std::vector<Recipe> R = [] {
    std::vector<Recipe> r;
    r.push_back({"S1", "boundary of the 2-simplex", [] { return sphere(1); }, true, 0, {{1, {}}, {1, {}}}, true, kAll,
                 [](const SimplicialComplex& K) { return std::vector<FilteredComplex>{FilteredComplex::trivial(K, "intrinsic")}; }});
    r.push_back({"S2", "boundary of the 3-simplex", [] { return sphere(2); }, true, 2, {{1, {}}, {0, {}}, {1, {}}}, true,
                 kAll});
    r.push_back({"S3", "boundary of the 4-simplex", [] { return sphere(3); }, true, 0,
                 {{1, {}}, {0, {}}, {0, {}}, {1, {}}}, true, kAll});
    r.push_back({"S4", "boundary of the 5-simplex", [] { return sphere(4); }, true, 2,
                 {{1, {}}, {0, {}}, {0, {}}, {0, {}}, {1, {}}}, true, kAll});
    r.push_back({"T2", "7-vertex torus", torus7, true, 0, {{1, {}}, {2, {}}, {1, {}}}, true, kAll});
    r.push_back({"RP2", "6-vertex projective plane", rp2_6, true, 1, {{1, {}}, {0, {2}}, {0, {}}}, false, kAll});
    r.push_back({"T3", "product of three 3-vertex circles", torus3, true, 0, {{1, {}}, {3, {}}, {3, {}}, {1, {}}}, true,
                 kAll});
    r.push_back({"RP3", "11-vertex projective 3-space", rp3_11, true, 0, {{1, {}}, {0, {2}}, {0, {}}, {1, {}}}, true,
                 kAll});
    r.push_back({"Sigma-T2", "suspension of the 7-vertex torus", [] { return susp(torus7()); }, true, 2,
                 {{1, {}}, {0, {}}, {2, {}}, {1, {}}}, true, closed_verdicts(false, false, true, true)});
    r.push_back({"Sigma-T3", "suspension of the 3-torus", [] { return susp(torus3()); }, true, 2,
                 {{1, {}}, {0, {}}, {3, {}}, {3, {}}, {1, {}}}, true, kAll});
    r.push_back({"Sigma-RP2", "suspension of the projective plane", [] { return susp(rp2_6()); }, true, 1,
                 {{1, {}}, {0, {}}, {0, {2}}, {0, {}}}, false, closed_verdicts(true, false, false, false)});
    r.push_back({"Sigma-RP3", "suspension of projective 3-space", [] { return susp(rp3_11()); }, true, 2,
                 {{1, {}}, {0, {}}, {0, {2}}, {0, {}}, {1, {}}}, true, closed_verdicts(true, false, true, true)});
    r.push_back({"Sigma2-T3", "double suspension of the 3-torus", [] { return susp(susp(torus3())); }, true, 0,
                 {{1, {}}, {0, {}}, {0, {}}, {3, {}}, {3, {}}, {1, {}}}, true, kAll});
    r.push_back({"S1xSigma-T2", "circle times the suspended torus", [] { return product(circle(3), susp(torus7())).complex; },
                 true, 0, {{1, {}}, {1, {}}, {2, {}}, {3, {}}, {1, {}}}, true,
                 closed_verdicts(false, false, true, true)});
    r.push_back({"S1-pt", "4-vertex circle with a marked point", [] { return circle(4); }, true, 0, {{1, {}}, {1, {}}},
                 true, {}, [](const SimplicialComplex& K) {
                   std::vector<int> lv = FilteredComplex::trivial(K).level_table();
                   lv[K.faces().global_id({0})] = 0;
                   FilteredComplex FX = FilteredComplex::from_levels(K, lv, "marked");
                   FX.classical = false;
                   return std::vector<FilteredComplex>{FX};
                 }});
    r.push_back({"I-T2", "interval times the torus", [] { return interval_times(torus7()); }, false, 0,
                 {{1, {}}, {2, {}}, {1, {}}, {0, {}}}, true, {{"witt:Q", true}}, [](const SimplicialComplex&) {
                   return cylinder_strata(torus7());
                 }});
    r.push_back({"I-Sigma-T2", "interval times the suspended torus", [] { return interval_times(susp(torus7())); }, false,
                 2, {{1, {}}, {0, {}}, {2, {}}, {1, {}}, {0, {}}}, true, {{"witt:Q", false}},
                 [](const SimplicialComplex&) { return cylinder_strata(susp(torus7())); }});
    r.push_back({"I-Sigma-T3", "interval times the suspended 3-torus", [] { return interval_times(susp(torus3())); },
                 false, 2, {{1, {}}, {0, {}}, {3, {}}, {3, {}}, {1, {}}, {0, {}}}, true, {{"witt:Q", true}},
                 [](const SimplicialComplex&) { return cylinder_strata(susp(torus3())); }});
    return r;
  }();
  return R;
}

std::string render(const std::vector<HomologyGroup>& h) {
  std::ostringstream os;
  for (const auto& g : h) {
    os << "H" << g.degree << "=" << g.rank;
    for (const auto& t : g.torsion) os << "+Z/" << t;
    os << " ";
  }
  return os.str();
}

CatalogEntry build(const Recipe& r) {
  CatalogEntry e;
  e.name = r.name;
  e.description = r.description;
  e.complex = r.build();
  e.closed = r.closed;
  e.euler = r.euler;
  e.homology = table(r.homology);
  e.orientable = r.orientable;
  e.verdicts = r.verdicts;
  if (r.strata) {
    e.stratifications = r.strata(e.complex);
  } else {
    FilteredComplex I = intrinsic_stratification(e.complex);
    I.name = "intrinsic";
    FilteredComplex J = refine_with_point(I);
    J.name = "refined";
    e.stratifications = {I, J};
  }
  for (auto& s : e.stratifications)
    if (!e.closed && !s.boundary) s.boundary = boundary_subcomplex(e.complex);
  return e;
}

}  // namespace

std::vector<std::string> verify(const CatalogEntry& e) {
  std::vector<std::string> bad;
  if (euler_characteristic_faces(e.complex) != e.euler)
    bad.push_back("euler characteristic " + std::to_string(euler_characteristic_faces(e.complex)));
  const auto h = homology(e.complex, Ring::integers());
  if (h != e.homology) bad.push_back("homology " + render(h));
  if (orient(e.complex).orientable != e.orientable) bad.push_back("orientability");
  if (boundary_subcomplex(e.complex).is_empty() != e.closed) bad.push_back("boundary");
  for (const auto& s : e.stratifications) {
    if (s.complex != e.complex) bad.push_back("stratification " + s.name + " has another carrier");
    const ValidationReport V = validate(s, e.closed ? Mode::Closed : Mode::WithBoundary);
    if (!V.pass) bad.push_back("stratification " + s.name + " fails clause " + V.first_failure()->clause);
  }
  return bad;
}

std::vector<std::string> list() {
  std::vector<std::string> out;
  for (const auto& r : recipes()) out.push_back(r.name);
  return out;
}

const CatalogEntry& get(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<CatalogEntry>> cache;
  const auto& R = recipes();
  auto it = std::find_if(R.begin(), R.end(), [&](const Recipe& r) { return r.name == name; });
  if (it == R.end()) throw Error(ErrorKind::UnknownName, "no catalog entry '" + name + "'");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[name];
  if (!slot) {
    auto e = std::make_unique<CatalogEntry>(build(*it));
    const auto bad = verify(*e);
    if (!bad.empty()) throw Error(ErrorKind::InvariantBreach, "catalog entry " + name + ": " + bad.front());
    slot = std::move(e);
  }
  return *slot;
}

}  // namespace strata::catalog
