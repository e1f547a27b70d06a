#include "strata/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace strata::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Simplex> simplices_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of simplices");
  std::vector<Simplex> out;
  for (const auto& s : j) out.push_back(simplex_from_json(s));
  return out;
}

Json simplices_to_json(std::vector<Simplex> ss) {
  std::sort(ss.begin(), ss.end());
  Json a = Json::array();
  for (const auto& s : ss) a.push_back(simplex_to_json(s));
  return a;
}

Json map_to_json(const VertexMap& m) {
  std::vector<std::pair<Vertex, Vertex>> pairs(m.begin(), m.end());
  std::sort(pairs.begin(), pairs.end());
  Json a = Json::array();
  for (const auto& [u, w] : pairs) a.push_back(Json::array({u, w}));
  return a;
}

VertexMap map_from_json(const Json& j) {
  if (!j.is_array()) bad("vertex map must be an array of [from, to] pairs");
  VertexMap m;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      bad("vertex map entry must be [from, to]");
    if (!m.emplace(p[0].get<Vertex>(), p[1].get<Vertex>()).second) bad("vertex map repeats a source vertex");
  }
  return m;
}

Json point_array(const std::array<std::array<double, 2>, 7>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(Json::array({p[0], p[1]}));
  return a;
}

std::array<std::array<double, 2>, 7> point_array_from(const Json& j) {
  if (!j.is_array() || j.size() != 7) bad("corner coordinates must list 7 points");
  std::array<std::array<double, 2>, 7> pts{};
  for (std::size_t i = 0; i < 7; ++i) pts[i] = {j[i].at(0).get<double>(), j[i].at(1).get<double>()};
  return pts;
}

Json vertices_to_json(const std::vector<Vertex>& vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(v);
  return a;
}

std::vector<Vertex> vertices_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a vertex list");
  std::vector<Vertex> out;
  for (const auto& v : j) out.push_back(v.get<Vertex>());
  return out;
}

}  // namespace

Json simplex_to_json(const Simplex& s) {
  Json a = Json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

Simplex simplex_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("simplex must be a non-empty array of vertices");
  Simplex s;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > std::numeric_limits<Vertex>::max())
      bad("vertices must be non-negative integers");
    s.push_back(v.get<Vertex>());
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) bad("simplex " + j.dump() + " repeats a vertex");
  return s;
}

Json complex_to_json(const SimplicialComplex& K, const std::string& name) {
  Json j;
  if (!name.empty()) j["name"] = name;
  if (K.is_empty()) j["dimension"] = K.dimension();
  j["facets"] = simplices_to_json(K.facets());
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  const std::vector<Simplex> fs = simplices_from_json(field(j, "facets"));
  if (fs.empty()) {
    if (!j.contains("dimension") || !j.at("dimension").is_number_integer())
      bad("the empty complex needs an integer 'dimension'");
    return SimplicialComplex::empty(j.at("dimension").get<int>());
  }
  return SimplicialComplex::from_facets(fs);
}

Json orientation_to_json(const Orientation& o) {
  Json a = Json::array();
  for (const auto& [f, s] : o.sign) a.push_back({{"facet", simplex_to_json(f)}, {"sign", s}});
  return a;
}

Orientation orientation_from_json(const Json& j) {
  if (!j.is_array()) bad("orientation must be an array of {facet, sign}");
  Orientation o;
  for (const auto& e : j) {
    const int s = field(e, "sign").get<int>();
    if (s != 1 && s != -1) bad("orientation signs must be +1 or -1");
    o.sign[simplex_from_json(field(e, "facet"))] = s;
  }
  return o;
}

Json filtered_to_json(const FilteredComplex& FX) {
  Json j = complex_to_json(FX.complex, FX.name);
  Json sk = Json::object();
  for (int d = 0; d + 1 < static_cast<int>(FX.skeleta.size()); ++d)
    sk[std::to_string(d)] = simplices_to_json(FX.skeleta[d].facets());
  j["skeleta"] = sk;
  if (FX.boundary) j["boundary"] = simplices_to_json(FX.boundary->facets());
  j["classical"] = FX.classical;
  if (FX.orientation) j["orientation"] = orientation_to_json(*FX.orientation);
  return j;
}

FilteredComplex filtered_from_json(const Json& j) {
  const SimplicialComplex K = complex_from_json(j);
  const std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string();
  FilteredComplex FX;
  if (j.contains("skeleta")) {
    const Json& sk = j.at("skeleta");
    if (!sk.is_object()) bad("'skeleta' must map dimensions to generator arrays");
    std::map<int, std::vector<Simplex>> gens;
    for (auto it = sk.begin(); it != sk.end(); ++it) {
      int d = 0;
      try {
        std::size_t used = 0;
        d = std::stoi(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument(it.key());
      } catch (const std::exception&) {
        bad("skeleton key '" + it.key() + "' is not a dimension");
      }
      if (d < 0 || d > K.dimension()) throw Error(ErrorKind::MalformedFiltration, "skeleton dimension " + it.key());
      gens[d] = simplices_from_json(it.value());
    }
    FX = FilteredComplex::from_generators(K, gens, name);
  } else {
    FX = FilteredComplex::trivial(K, name);
  }
  if (j.contains("boundary")) {
    const auto gens = simplices_from_json(j.at("boundary"));
    FX.boundary = gens.empty() ? SimplicialComplex::empty(K.dimension() - 1) : SimplicialComplex::generated(gens);
  }
  if (j.contains("classical")) FX.classical = j.at("classical").get<bool>();
  if (j.contains("orientation")) FX.orientation = orientation_from_json(j.at("orientation"));
  return FX;
}

Json bigint_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<long long>::max() && v >= std::numeric_limits<long long>::min())
    return static_cast<long long>(v);
  return v.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  bad("expected an integer");
}

Json homology_to_json(const std::vector<HomologyGroup>& groups) {
  Json a = Json::array();
  for (const auto& g : groups) {
    Json t = Json::array();
    for (const auto& q : g.torsion) t.push_back(bigint_to_json(q));
    a.push_back({{"degree", g.degree}, {"rank", g.rank}, {"torsion", t}});
  }
  return a;
}

Json clause_to_json(const ClauseResult& c) {
  return {{"clause", c.clause}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}};
}

Json report_to_json(const ValidationReport& R) {
  Json cs = Json::array();
  for (const auto& c : R.clauses) cs.push_back(clause_to_json(c));
  return {{"pass", R.pass}, {"exact", R.exact}, {"clauses", cs}, {"singular_strata", R.singular_strata}};
}

Json verdict_to_json(const ClassVerdict& v, bool with_links) {
  Json ws = Json::array();
  for (const auto& w : v.witnesses) {
    Json x = {{"location", w.location}, {"condition", w.condition}, {"value", w.value}};
    if (with_links) x["link"] = complex_to_json(w.link);
    ws.push_back(x);
  }
  Json cs = Json::array();
  for (const auto& c : v.clauses) cs.push_back(clause_to_json(c));
  Json j = {{"member", v.member}, {"heuristic", v.heuristic}, {"witnesses", ws}};
  if (!v.clauses.empty()) j["clauses"] = cs;
  return j;
}

Json certificate_to_json(const BordismCertificate& C) {
  Json pieces = Json::array();
  for (const auto& p : C.pieces)
    pieces.push_back(
        {{"label", p.label}, {"complex", filtered_to_json(p.piece)}, {"iso", map_to_json(p.iso)}, {"sign", p.sign}});
  Json collars = Json::array();
  for (const auto& c : C.collars) collars.push_back({{"label", c.label}, {"map", map_to_json(c.map)}, {"end", c.end}});
  Json corners = Json::array();
  for (const auto& c : C.corners)
    corners.push_back({{"source", point_array(c.source)},
                       {"target", point_array(c.target)},
                       {"triangles", simplices_to_json(c.triangles)},
                       {"source_boundary", vertices_to_json(c.source_boundary)},
                       {"target_boundary", vertices_to_json(c.target_boundary)},
                       {"verified", c.verified}});
  Json prov = Json::array();
  for (const auto& s : C.provenance) prov.push_back(s);
  return {{"Y", filtered_to_json(C.Y)}, {"pieces", pieces}, {"collars", collars}, {"corners", corners},
          {"provenance", prov}};
}

BordismCertificate certificate_from_json(const Json& j) {
  BordismCertificate C;
  C.Y = filtered_from_json(field(j, "Y"));
  for (const auto& p : field(j, "pieces")) {
    BoundaryPiece b;
    b.label = field(p, "label").get<std::string>();
    b.piece = filtered_from_json(field(p, "complex"));
    b.iso = map_from_json(field(p, "iso"));
    b.sign = field(p, "sign").get<int>();
    if (b.sign != 1 && b.sign != -1) bad("piece signs must be +1 or -1");
    C.pieces.push_back(std::move(b));
  }
  if (j.contains("collars"))
    for (const auto& c : j.at("collars"))
      C.collars.push_back({field(c, "label").get<std::string>(), map_from_json(field(c, "map")), field(c, "end").get<int>()});
  if (j.contains("corners"))
    for (const auto& c : j.at("corners")) {
      CornerCertificate k;
      k.source = point_array_from(field(c, "source"));
      k.target = point_array_from(field(c, "target"));
      k.triangles = simplices_from_json(field(c, "triangles"));
      k.source_boundary = vertices_from_json(field(c, "source_boundary"));
      k.target_boundary = vertices_from_json(field(c, "target_boundary"));
      k.verified = field(c, "verified").get<bool>();
      C.corners.push_back(std::move(k));
    }
  if (j.contains("provenance"))
    for (const auto& s : j.at("provenance")) C.provenance.push_back(s.get<std::string>());
  return C;
}

Json check_to_json(const CertificateCheck& c) {
  Json cs = Json::array();
  for (const auto& x : c.checks) cs.push_back(clause_to_json(x));
  return {{"pass", c.pass}, {"checks", cs}};
}

std::string canonical(const Json& j) { return j.dump(); }

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace strata::io
