#include "strata/bordism.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

namespace strata {

namespace {

struct RidgeIndex {
  std::unordered_map<Simplex, std::vector<std::pair<int, int>>, SimplexHash> by_ridge;
};

RidgeIndex ridge_index(const SimplicialComplex& K) {
  RidgeIndex R;
  const auto& fs = K.facets();
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t k = 0; k < fs[i].size(); ++k) {
      Simplex r = fs[i];
      r.erase(r.begin() + k);
      R.by_ridge[r].emplace_back(static_cast<int>(i), static_cast<int>(k));
    }
  return R;
}

int parity(int k) { return k % 2 == 0 ? 1 : -1; }

/// Sign wanted on the ridge image (relative to its sorted order) for a piece facet.
int wanted_ridge_sign(const BoundaryPiece& p, const Simplex& f) {
  return p.sign * pushforward_sign(f, p.piece.orientation->at(f), p.iso);
}

/// Coherent orientation of Y seeded so that each oriented piece receives sign · (its orientation).
Orientation orient_from_pieces(const SimplicialComplex& Y, const std::vector<BoundaryPiece>& pieces) {
  const auto& fs = Y.facets();
  const RidgeIndex R = ridge_index(Y);
  std::vector<int> sign(fs.size(), 0);
  std::queue<int> q;
  for (const auto& p : pieces) {
    if (!p.piece.orientation) continue;
    for (const auto& f : p.piece.complex.facets()) {
      const Simplex r = map_simplex(f, p.iso);
      auto it = R.by_ridge.find(r);
      if (it == R.by_ridge.end() || it->second.size() != 1)
        throw Error(ErrorKind::InvariantBreach, "piece facet " + to_string(f) + " is not a boundary ridge");
      const auto [F, k] = it->second.front();
      const int s = wanted_ridge_sign(p, f) * parity(k);
      if (sign[F] == 0) {
        sign[F] = s;
        q.push(F);
      } else if (sign[F] != s) {
        throw Error(ErrorKind::IncompatibleOrientations, "boundary pieces disagree at " + to_string(fs[F]));
      }
    }
    break;
  }
  auto run = [&] {
    while (!q.empty()) {
      const int a = q.front();
      q.pop();
      for (std::size_t k = 0; k < fs[a].size(); ++k) {
        Simplex r = fs[a];
        r.erase(r.begin() + k);
        const auto& lst = R.by_ridge.at(r);
        if (lst.size() != 2) continue;
        const auto [b, kb] = lst[0].first == a ? lst[1] : lst[0];
        const int want = -induced_sign(sign[a], static_cast<int>(k)) * parity(kb);
        if (sign[b] == 0) {
          sign[b] = want;
          q.push(b);
        } else if (sign[b] != want) {
          throw Error(ErrorKind::IncompatibleOrientations, "no coherent orientation through " + to_string(r));
        }
      }
    }
  };
  run();
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (sign[i] == 0) {
      sign[i] = 1;
      q.push(static_cast<int>(i));
      run();
    }
  Orientation o;
  for (std::size_t i = 0; i < fs.size(); ++i) o.sign[fs[i]] = sign[i];
  return o;
}

std::optional<Orientation> orientation_of(const FilteredComplex& FX) {
  if (FX.orientation) return FX.orientation;
  if (FX.complex.is_empty()) return Orientation{};
  OrientResult r = orient(FX.complex);
  if (!r.orientable) return std::nullopt;
  return r.orientation;
}

FilteredComplex with_orientation(FilteredComplex FX) {
  FX.orientation = orientation_of(FX);
  return FX;
}

void require_closed(const FilteredComplex& FX) {
  if ((FX.boundary && !FX.boundary->is_empty()) || !boundary_subcomplex(FX.complex).is_empty())
    throw Error(ErrorKind::NotClosed, "construction needs a closed space");
}

/// Attach boundary and an orientation induced by the pieces when they are all oriented.
void finish(BordismCertificate& C) {
  C.Y.boundary = boundary_subcomplex(C.Y.complex);
  bool oriented = !C.pieces.empty();
  for (const auto& p : C.pieces)
    if (!p.piece.orientation) oriented = false;
  if (oriented) C.Y.orientation = orient_from_pieces(C.Y.complex, C.pieces);
}

std::string label_or(const FilteredComplex& FX, const std::string& fallback) {
  return FX.name.empty() ? fallback : FX.name;
}

}  // namespace

const BoundaryPiece& BordismCertificate::piece(const std::string& label) const {
  for (const auto& p : pieces)
    if (p.label == label) return p;
  throw Error(ErrorKind::UnknownName, "no boundary piece '" + label + "'");
}

BordismCertificate BordismCertificate::reversed() const {
  BordismCertificate C = *this;
  for (auto& p : C.pieces) p.sign = -p.sign;
  if (C.Y.orientation) C.Y.orientation = C.Y.orientation->reversed();
  C.provenance.push_back("reversed");
  return C;
}

FilteredComplex half_intrinsic_suspension(const FilteredComplex& FX, Exec exec) {
  require_closed(FX);
  const SimplicialComplex& K = FX.complex;
  const SuspensionResult S = suspension(K);
  const int n = FX.dim();
  const IntrinsicData D = intrinsic_data(K, exec);
  const auto& FK = K.faces();
  const std::vector<int> lx = FX.level_table();
  const std::vector<int> li = intrinsic_from_data(D, "").level_table();
  const auto& F = S.complex.faces();
  std::vector<int> lv(F.total);
  for (int id = 0; id < F.total; ++id) {
    Simplex s = F.by_global(id);
    const bool north = std::binary_search(s.begin(), s.end(), S.north);
    const bool south = std::binary_search(s.begin(), s.end(), S.south);
    s.erase(std::remove_if(s.begin(), s.end(), [&](Vertex v) { return v == S.north || v == S.south; }), s.end());
    if (s.empty()) {
      lv[id] = north ? 0 : D.J_whole;
      continue;
    }
    const int kid = FK.global_id(s);
    if (north) {
      lv[id] = lx[kid] + 1;
    } else if (south) {
      lv[id] = li[kid] + 1;
    } else {
      lv[id] = lx[kid] < n ? lx[kid] : n + 1;
    }
  }
  FilteredComplex out = FilteredComplex::from_levels(S.complex, lv, "half-suspension(" + label_or(FX, "X") + ")");
  out.classical = FX.classical;
  out.heuristic = FX.heuristic || D.any_heuristic;
  return out;
}

BordismCertificate bordism_to_intrinsic(const FilteredComplex& FX_in, Exec exec) {
  require_closed(FX_in);
  if (!FX_in.classical) throw Error(ErrorKind::NotClassical, "bordism to the intrinsic stratification");
  const FilteredComplex FX = with_orientation(FX_in);
  const SimplicialComplex& K = FX.complex;
  const int n = FX.dim();
  const SimplicialComplex P3 = SimplicialComplex::from_facets({{0, 1}, {1, 2}});
  const ProductResult PR = product(P3, K);
  const IntrinsicData D = intrinsic_data(K, exec);
  const auto& FK = K.faces();
  const std::vector<int> lx = FX.level_table();
  FilteredComplex star = intrinsic_from_data(D, label_or(FX, "X") + "*");
  const std::vector<int> li = star.level_table();
  const auto& F = PR.complex.faces();
  std::vector<int> lv(F.total);
  for (int id = 0; id < F.total; ++id) {
    std::set<Vertex> pi, kappa;
    for (Vertex v : F.by_global(id)) {
      pi.insert(PR.pairs[v].first);
      kappa.insert(PR.pairs[v].second);
    }
    const int kid = FK.global_id(Simplex(kappa.begin(), kappa.end()));
    const bool has0 = pi.count(0) > 0, has2 = pi.count(2) > 0;
    if (has2) {
      lv[id] = lx[kid] + 1;
    } else if (has0) {
      lv[id] = li[kid] + 1;
    } else {
      lv[id] = lx[kid] < n ? lx[kid] : n + 1;
    }
  }
  BordismCertificate C;
  C.Y = FilteredComplex::from_levels(PR.complex, lv, "bordism(" + label_or(FX, "X") + " -> intrinsic)");
  C.Y.heuristic = FX.heuristic || star.heuristic;
  if (FX.orientation) {
    FilteredComplex FXo = FX;
    star.orientation = extend_orientation_to_intrinsic(FXo);
  }
  VertexMap top, bottom;
  for (Vertex k : K.vertices()) {
    top[k] = PR.id_of(2, k);
    bottom[k] = PR.id_of(0, k);
  }
  const std::string lx_label = label_or(FX, "X");
  C.pieces.push_back({lx_label, FX, top, +1});
  C.pieces.push_back({lx_label + "*", star, bottom, -1});
  const SimplicialComplex I = SimplicialComplex::from_facets({{0, 1}});
  const ProductResult CP = product(I, K);
  VertexMap collar_top, collar_bottom;
  for (Vertex v : CP.complex.vertices()) {
    const auto [t, k] = CP.pairs[v];
    collar_top[v] = PR.id_of(1 + t, k);
    collar_bottom[v] = PR.id_of(t, k);
  }
  C.collars.push_back({lx_label, collar_top, 1});
  C.collars.push_back({lx_label + "*", collar_bottom, 0});
  C.provenance.push_back("bordism_to_intrinsic(" + lx_label + "): P3 x X, north half by X, south half by X*");
  finish(C);
  return C;
}

BordismCertificate cylinder(const FilteredComplex& FX_in, Exec exec) {
  (void)exec;
  const FilteredComplex FX = with_orientation(FX_in);
  const SimplicialComplex& K = FX.complex;
  const SimplicialComplex I = SimplicialComplex::from_facets({{0, 1}});
  const ProductResult PR = product(I, K);
  const auto& FK = K.faces();
  const std::vector<int> lx = FX.level_table();
  const auto& F = PR.complex.faces();
  std::vector<int> lv(F.total);
  for (int id = 0; id < F.total; ++id) {
    std::set<Vertex> kappa;
    for (Vertex v : F.by_global(id)) kappa.insert(PR.pairs[v].second);
    lv[id] = lx[FK.global_id(Simplex(kappa.begin(), kappa.end()))] + 1;
  }
  BordismCertificate C;
  const std::string label = label_or(FX, "X");
  C.Y = FilteredComplex::from_levels(PR.complex, lv, "cylinder(" + label + ")");
  C.Y.classical = FX.classical;
  C.Y.heuristic = FX.heuristic;
  const SimplicialComplex dX = boundary_subcomplex(K);
  VertexMap id_map;
  for (Vertex v : PR.complex.vertices()) id_map[v] = v;
  if (dX.is_empty()) {
    VertexMap top, bottom;
    for (Vertex k : K.vertices()) {
      top[k] = PR.id_of(1, k);
      bottom[k] = PR.id_of(0, k);
    }
    FilteredComplex piece = FX;
    piece.boundary.reset();
    C.pieces.push_back({"top", piece, top, +1});
    C.pieces.push_back({"bottom", piece, bottom, -1});
    C.collars.push_back({"top", id_map, 1});
    C.collars.push_back({"bottom", id_map, 0});
    C.provenance.push_back("cylinder(" + label + ")");
    finish(C);
    return C;
  }
  const SimplicialComplex dY = boundary_subcomplex(PR.complex);
  const auto& FB = dY.faces();
  std::vector<int> lb(FB.total);
  for (int id = 0; id < FB.total; ++id) lb[id] = lv[F.global_id(FB.by_global(id))] - 1;
  FilteredComplex piece = FilteredComplex::from_levels(dY, lb, "boundary(cylinder(" + label + "))");
  piece.classical = FX.classical;
  VertexMap ident;
  for (Vertex v : dY.vertices()) ident[v] = v;
  if (FX.orientation) {
    C.Y.orientation = orient_from_pieces(PR.complex, {{"top", FX, [&] {
                                                        VertexMap m;
                                                        for (Vertex k : K.vertices()) m[k] = PR.id_of(1, k);
                                                        return m;
                                                      }(), +1}});
    Orientation induced;
    const RidgeIndex R = ridge_index(PR.complex);
    for (const auto& r : dY.facets()) {
      const auto [Fi, k] = R.by_ridge.at(r).front();
      induced.sign[r] = induced_sign(C.Y.orientation->at(PR.complex.facets()[Fi]), k);
    }
    piece.orientation = std::move(induced);
  }
  C.pieces.push_back({"boundary", piece, ident, +1});
  CornerCertificate corner = corner_unfolding();
  corner.verified = verify_corner(corner, &dX);
  C.corners.push_back(std::move(corner));
  C.provenance.push_back("cylinder(" + label + ") with straightened corners along the boundary");
  C.Y.boundary = dY;
  return C;
}

BordismCertificate glue(const BordismCertificate& Y1, const std::string& label1, const BordismCertificate& Y2,
                        const std::string& label2, const VertexMap& iso_in, Exec exec) {
  (void)exec;
  const BoundaryPiece& p1 = Y1.piece(label1);
  const BoundaryPiece& p2 = Y2.piece(label2);
  if (p1.sign == p2.sign) throw Error(ErrorKind::SignClash, "pieces " + label1 + " and " + label2 + " have equal signs");
  auto has_collar = [](const BordismCertificate& C, const std::string& l) {
    return std::any_of(C.collars.begin(), C.collars.end(), [&](const CollarCertificate& c) { return c.label == l; });
  };
  if (!has_collar(Y1, label1) || !has_collar(Y2, label2))
    throw Error(ErrorKind::CollarMissing, "gluing needs collars on both pieces");
  const std::vector<int> l1 = p1.piece.level_table();
  const std::vector<int> l2 = p2.piece.level_table();
  IsoOptions opts;
  opts.label1 = [&](const Simplex& s) { return l1[p1.piece.complex.faces().global_id(s)]; };
  opts.label2 = [&](const Simplex& s) { return l2[p2.piece.complex.faces().global_id(s)]; };
  VertexMap iso = iso_in;
  if (iso.empty()) {
    if (p1.piece.complex == p2.piece.complex) {
      for (Vertex v : p1.piece.complex.vertices()) iso[v] = v;
      if (!verify_isomorphism(p1.piece.complex, p2.piece.complex, iso, opts)) iso.clear();
    }
    if (iso.empty()) {
      auto found = isomorphic(p1.piece.complex, p2.piece.complex, opts);
      if (!found) throw Error(ErrorKind::NoIsomorphism, "pieces " + label1 + " and " + label2 + " are not isomorphic");
      iso = *found;
    }
  }
  if (!verify_isomorphism(p1.piece.complex, p2.piece.complex, iso, opts))
    throw Error(ErrorKind::NoIsomorphism, "supplied map is not a stratified isomorphism");
  const SimplicialComplex& K1 = Y1.Y.complex;
  const SimplicialComplex& K2 = Y2.Y.complex;
  const SimplicialComplex seam1 = relabel(p1.piece.complex, p1.iso);
  const SimplicialComplex seam2 = relabel(p2.piece.complex, p2.iso);
  if (!is_full_subcomplex(seam1, K1) || !is_full_subcomplex(seam2, K2))
    throw Error(ErrorKind::NotFull, "glued pieces must be full subcomplexes");
  VertexMap to_new;
  const Vertex offset = K1.max_vertex() + 1;
  for (Vertex w : K2.vertices()) to_new[w] = w + offset;
  for (const auto& [u1, u2] : iso) to_new[p2.iso.at(u2)] = p1.iso.at(u1);
  const SimplicialComplex K2r = relabel(K2, to_new);
  std::vector<Simplex> facets = K1.facets();
  facets.insert(facets.end(), K2r.facets().begin(), K2r.facets().end());
  const SimplicialComplex K = SimplicialComplex::from_facets(std::move(facets));
  const auto& F = K.faces();
  std::vector<int> lv(F.total, -1);
  const std::vector<int> ly1 = Y1.Y.level_table();
  const std::vector<int> ly2 = Y2.Y.level_table();
  for (int id = 0; id < K1.faces().total; ++id) lv[F.global_id(K1.faces().by_global(id))] = ly1[id];
  for (int id = 0; id < K2.faces().total; ++id) {
    const int gid = F.global_id(map_simplex(K2.faces().by_global(id), to_new));
    if (lv[gid] >= 0 && lv[gid] != ly2[id])
      throw Error(ErrorKind::NoIsomorphism, "stratifications disagree along the seam");
    lv[gid] = ly2[id];
  }
  BordismCertificate C;
  C.Y = FilteredComplex::from_levels(K, lv, Y1.Y.name + " u " + Y2.Y.name);
  C.Y.classical = Y1.Y.classical && Y2.Y.classical;
  C.Y.heuristic = Y1.Y.heuristic || Y2.Y.heuristic;
  std::set<std::string> used;
  for (const auto& p : Y1.pieces)
    if (p.label != label1) {
      C.pieces.push_back(p);
      used.insert(p.label);
    }
  std::map<std::string, std::string> renamed;
  for (const auto& p : Y2.pieces)
    if (p.label != label2) {
      BoundaryPiece q = p;
      while (used.count(q.label)) q.label += "'";
      renamed[p.label] = q.label;
      used.insert(q.label);
      for (auto& [u, w] : q.iso) w = to_new.at(w);
      C.pieces.push_back(std::move(q));
    }
  for (const auto& c : Y1.collars)
    if (c.label != label1) C.collars.push_back(c);
  for (const auto& c : Y2.collars)
    if (c.label != label2) {
      CollarCertificate d = c;
      d.label = renamed.at(c.label);
      for (auto& [u, w] : d.map) w = to_new.at(w);
      C.collars.push_back(std::move(d));
    }
  C.corners = Y1.corners;
  C.corners.insert(C.corners.end(), Y2.corners.begin(), Y2.corners.end());
  C.provenance = Y1.provenance;
  C.provenance.insert(C.provenance.end(), Y2.provenance.begin(), Y2.provenance.end());
  C.provenance.push_back("glue(" + label1 + " = " + label2 + ")");
  C.Y.boundary = boundary_subcomplex(K);
  if (Y1.Y.orientation && Y2.Y.orientation) {
    Orientation o;
    for (const auto& f : K1.facets()) o.sign[f] = Y1.Y.orientation->at(f);
    for (const auto& f : K2.facets()) o.sign[map_simplex(f, to_new)] = pushforward_sign(f, Y2.Y.orientation->at(f), to_new);
    if (!is_coherent(K, o)) throw Error(ErrorKind::IncompatibleOrientations, "orientations disagree across the seam");
    C.Y.orientation = std::move(o);
  }
  std::set<Simplex> covered;
  for (const auto& p : C.pieces)
    for (const auto& f : p.piece.complex.facets()) covered.insert(map_simplex(f, p.iso));
  const auto& bf = C.Y.boundary->facets();
  if (covered != std::set<Simplex>(bf.begin(), bf.end()))
    throw Error(ErrorKind::InvariantBreach, "remaining pieces do not cover the boundary after gluing");
  return C;
}

BordismCertificate bordism_between(const FilteredComplex& FX, const FilteredComplex& FXp, Exec exec) {
  if (FX.complex != FXp.complex) throw Error(ErrorKind::DifferentCarrier, "stratifications of different complexes");
  const FilteredComplex A = with_orientation(FX);
  const FilteredComplex B = with_orientation(FXp);
  if (A.orientation.has_value() != B.orientation.has_value())
    throw Error(ErrorKind::IncompatibleOrientations, "only one stratification is oriented");
  if (A.orientation && extend_orientation_to_intrinsic(A) != extend_orientation_to_intrinsic(B))
    throw Error(ErrorKind::IncompatibleOrientations, "orientations do not extend to a common intrinsic orientation");
  const BordismCertificate Y1 = bordism_to_intrinsic(A, exec);
  const BordismCertificate Y2 = bordism_to_intrinsic(B, exec).reversed();
  BordismCertificate C = glue(Y1, Y1.pieces[1].label, Y2, Y2.pieces[1].label, {}, exec);
  C.Y.name = "bordism(" + label_or(FX, "X") + " ~ " + label_or(FXp, "X'") + ")";
  C.provenance.push_back("bordism_between");
  return C;
}

BordismCertificate restratify_bordism(const BordismCertificate& Yp, const FilteredComplex& X, const FilteredComplex& Z,
                                      Exec exec) {
  const BoundaryPiece* plus = nullptr;
  const BoundaryPiece* minus = nullptr;
  for (const auto& p : Yp.pieces) (p.sign > 0 ? plus : minus) = &p;
  if (!plus || !minus || Yp.pieces.size() != 2)
    throw Error(ErrorKind::IsomorphismMissing, "restratification needs exactly one (+) and one (-) piece");
  if (plus->piece.complex != X.complex || minus->piece.complex != Z.complex)
    throw Error(ErrorKind::DifferentCarrier, "requested stratifications live on other complexes");
  FilteredComplex Xn = X, Zn = Z, Xp = plus->piece, Zp = minus->piece;
  if (Xn.name == Xp.name) Xn.name += "'";
  if (Zn.name == Zp.name) Zn.name += "'";
  if (Xp.orientation && !Xn.orientation) Xn.orientation = Xp.orientation;
  if (Zp.orientation && !Zn.orientation) Zn.orientation = Zp.orientation;
  const BordismCertificate left = bordism_between(Xn, Xp, exec);
  BordismCertificate mid = glue(left, left.pieces[1].label, Yp, plus->label, {}, exec);
  const BordismCertificate right = bordism_between(Zp, Zn, exec);
  std::string zlabel;
  for (const auto& p : mid.pieces)
    if (p.sign < 0) zlabel = p.label;
  BordismCertificate C = glue(mid, zlabel, right, right.pieces[0].label, {}, exec);
  C.Y.name = "restratified(" + Yp.Y.name + ")";
  C.provenance.push_back("restratify_bordism: cylinders adjoined at both ends");
  return C;
}

CornerCertificate corner_unfolding() {
  CornerCertificate c;
  // o, a, a1, m, b1, b, hub d
  c.source = {{{0, 0}, {0.25, 0}, {0.25, 0.125}, {0.1875, 0.1875}, {0.125, 0.25}, {0, 0.25}, {0.125, 0.125}}};
  c.target = {{{0, 0}, {1, 0}, {1, 0.125}, {0, 0.125}, {-1, 0.125}, {-1, 0}, {0, 0.0625}}};
  for (Vertex i = 0; i < 6; ++i) {
    Simplex t{i, (i + 1) % 6, 6};
    std::sort(t.begin(), t.end());
    c.triangles.push_back(t);
  }
  c.source_boundary = {5, 0, 1};
  c.target_boundary = {5, 0, 1};
  return c;
}

bool verify_corner(const CornerCertificate& c, const SimplicialComplex* boundary) {
  auto det = [](const std::array<std::array<double, 2>, 7>& p, const Simplex& t) {
    const auto& A = p[t[0]];
    const auto& B = p[t[1]];
    const auto& Cc = p[t[2]];
    return (B[0] - A[0]) * (Cc[1] - A[1]) - (B[1] - A[1]) * (Cc[0] - A[0]);
  };
  int orientation = 0;
  for (const auto& t : c.triangles) {
    const double ds = det(c.source, t), dt = det(c.target, t);
    if (ds == 0 || dt == 0) return false;
    const int s = (ds > 0) == (dt > 0) ? 1 : -1;
    if (orientation == 0) orientation = s;
    if (s != orientation) return false;
  }
  const SimplicialComplex wheel = SimplicialComplex::from_facets(c.triangles);
  for (std::size_t i = 0; i + 1 < c.source_boundary.size(); ++i)
    if (!wheel.contains({std::min(c.source_boundary[i], c.source_boundary[i + 1]),
                         std::max(c.source_boundary[i], c.source_boundary[i + 1])}))
      return false;
  for (Vertex v : c.target_boundary)
    if (c.target[v][1] != 0) return false;
  for (Vertex v = 0; v < 7; ++v)
    if (std::find(c.target_boundary.begin(), c.target_boundary.end(), v) == c.target_boundary.end() &&
        c.target[v][1] == 0)
      return false;
  if (boundary && !boundary->is_empty()) {
    const SimplicialComplex P = product(wheel, *boundary).complex;
    for (const auto& [r, d] : ridge_degrees(P))
      if (d > 2) return false;
    if (orient(*boundary).orientable && !orient(P).orientable) return false;
  }
  return true;
}

namespace {

CertificateCheck verify_unguarded(const BordismCertificate& C, Exec exec) {
  CertificateCheck out;
  auto add = [&](const std::string& id, const std::string& title, bool pass, const std::string& detail = {}) {
    out.checks.push_back({id, title, pass, detail});
    if (!pass) out.pass = false;
  };
  const SimplicialComplex& Y = C.Y.complex;
  const ValidationReport V = validate(C.Y, Mode::WithBoundary, exec);
  add("validate", "Y is a stratified pseudomanifold with boundary", V.pass,
      V.pass ? std::string() : V.first_failure()->clause + ": " + V.first_failure()->detail);
  const SimplicialComplex dY = boundary_subcomplex(Y);
  const std::vector<int> ly = C.Y.level_table();
  const auto& FY = Y.faces();
  std::set<Simplex> covered;
  std::set<Vertex> seen;
  bool disjoint_ok = true;
  for (const auto& p : C.pieces) {
    std::string detail;
    std::set<Vertex> img;
    for (const auto& [u, w] : p.iso) img.insert(w);
    if (img.size() != p.iso.size()) detail = "vertex map is not injective";
    for (Vertex w : img)
      if (!seen.insert(w).second) disjoint_ok = false;
    const std::vector<int> lp = p.piece.level_table();
    const auto& FP = p.piece.complex.faces();
    for (int id = 0; id < FP.total && detail.empty(); ++id) {
      const Simplex im = map_simplex(FP.by_global(id), p.iso);
      if (!dY.contains(im)) {
        detail = "image of " + to_string(FP.by_global(id)) + " leaves the boundary";
      } else if (ly[FY.global_id(im)] != lp[id] + 1) {
        detail = "stratum mismatch at " + to_string(FP.by_global(id));
      }
    }
    for (const auto& f : p.piece.complex.facets()) covered.insert(map_simplex(f, p.iso));
    add("piece:" + p.label, "piece " + p.label + " is a labeled copy in the boundary", detail.empty(), detail);
  }
  add("disjoint", "piece images are disjoint", disjoint_ok);
  add("cover", "pieces cover the boundary", covered == std::set<Simplex>(dY.facets().begin(), dY.facets().end()));
  const SimplicialComplex I = SimplicialComplex::from_facets({{0, 1}});
  for (const auto& c : C.collars) {
    std::string detail;
    const BoundaryPiece* p = nullptr;
    for (const auto& q : C.pieces)
      if (q.label == c.label) p = &q;
    if (!p) {
      add("collar:" + c.label, "collar", false, "no such piece");
      continue;
    }
    const ProductResult P = product(I, p->piece.complex);
    const std::vector<int> lp = p->piece.level_table();
    const auto& FP = p->piece.complex.faces();
    std::set<Vertex> img;
    for (Vertex v : P.complex.vertices()) {
      auto it = c.map.find(v);
      if (it == c.map.end()) {
        detail = "collar map undefined at a vertex";
        break;
      }
      img.insert(it->second);
      const auto [t, k] = P.pairs[v];
      auto pk = p->iso.find(k);
      if (t == c.end && (pk == p->iso.end() || pk->second != it->second)) detail = "collar end differs from the piece map";
    }
    if (detail.empty() && img.size() != P.complex.vertices().size()) detail = "collar map is not injective";
    for (const auto& f : P.complex.facets()) {
      if (!detail.empty()) break;
      if (!Y.contains(map_simplex(f, c.map))) detail = "collar simplex missing from Y";
    }
    const auto& FPP = P.complex.faces();
    for (int id = 0; id < FPP.total && detail.empty(); ++id) {
      const Simplex& s = FPP.by_global(id);
      std::set<Vertex> kap;
      bool touches_end = false;
      for (Vertex v : s) {
        kap.insert(P.pairs[v].second);
        if (P.pairs[v].first == c.end) touches_end = true;
      }
      if (!touches_end) continue;
      const int want = lp[FP.global_id(Simplex(kap.begin(), kap.end()))] + 1;
      if (ly[FY.global_id(map_simplex(s, c.map))] != want) detail = "collar strata are not products at " + to_string(s);
    }
    add("collar:" + c.label, "collar of " + c.label + " is a stratified product", detail.empty(), detail);
  }
  for (std::size_t i = 0; i < C.corners.size(); ++i)
    add("corner:" + std::to_string(i), "corner unfolding", C.corners[i].verified && verify_corner(C.corners[i]));
  if (C.Y.orientation) {
    std::string detail;
    if (!is_coherent(Y, *C.Y.orientation)) detail = "orientation of Y is not coherent";
    const RidgeIndex R = ridge_index(Y);
    for (const auto& p : C.pieces) {
      if (!detail.empty() || !p.piece.orientation) continue;
      for (const auto& f : p.piece.complex.facets()) {
        const Simplex r = map_simplex(f, p.iso);
        auto it = R.by_ridge.find(r);
        if (it == R.by_ridge.end() || it->second.size() != 1) {
          detail = "piece " + p.label + " is not carried onto boundary ridges";
          break;
        }
        const auto [Fi, k] = it->second.front();
        if (induced_sign(C.Y.orientation->at(Y.facets()[Fi]), k) != wanted_ridge_sign(p, f)) {
          detail = "induced orientation disagrees on piece " + p.label;
          break;
        }
      }
    }
    add("orientation", "boundary orientations are sign times the piece orientations", detail.empty(), detail);
  }
  return out;
}

}  // namespace

CertificateCheck verify_certificate(const BordismCertificate& C, Exec exec) {
  try {
    return verify_unguarded(C, exec);
  } catch (const std::exception& e) {
    CertificateCheck out;
    out.pass = false;
    out.checks.push_back({"structure", "certificate maps are well formed", false, e.what()});
    return out;
  }
}

}  // namespace strata
