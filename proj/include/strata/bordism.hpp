#pragma once

#include <array>
#include <string>
#include <vector>

#include "strata/strat.hpp"

namespace strata {

struct BoundaryPiece {
  std::string label;
  FilteredComplex piece;
  /// Vertices of the piece to vertices of ∂Y.
  VertexMap iso;
  int sign = 1;
};

/// product(Δ¹, piece) mapped onto a neighborhood of the piece; `end` is the Δ¹ vertex sent to the boundary.
struct CollarCertificate {
  std::string label;
  VertexMap map;
  int end = 1;
};

/// Six-triangle unfolding of a square corner onto a half-disc, as a vertex correspondence with coordinates.
struct CornerCertificate {
  std::array<std::array<double, 2>, 7> source{};
  std::array<std::array<double, 2>, 7> target{};
  std::vector<Simplex> triangles;
  /// Source boundary path and its image path on the straightened side.
  std::vector<Vertex> source_boundary;
  std::vector<Vertex> target_boundary;
  bool verified = false;
};

struct BordismCertificate {
  FilteredComplex Y;
  std::vector<BoundaryPiece> pieces;
  std::vector<CollarCertificate> collars;
  std::vector<CornerCertificate> corners;
  std::vector<std::string> provenance;

  const BoundaryPiece& piece(const std::string& label) const;
  BordismCertificate reversed() const;
};

struct CertificateCheck {
  bool pass = true;
  std::vector<ClauseResult> checks;
};

/// Re-verifies every claim: validation with boundary, piece isomorphisms and coverage, collars, orientations.
CertificateCheck verify_certificate(const BordismCertificate& C, Exec exec = Exec::Parallel);

/// Suspension with north pole 0-stratum, X-strata along the north cone and the intrinsic cone strata on the south.
FilteredComplex half_intrinsic_suspension(const FilteredComplex& FX, Exec exec = Exec::Parallel);

/// Y = P₃ × X with the north half stratified by X and the south half by X*; pieces (X,+) and (X*,−).
BordismCertificate bordism_to_intrinsic(const FilteredComplex& FX, Exec exec = Exec::Parallel);
BordismCertificate bordism_between(const FilteredComplex& FX, const FilteredComplex& FXp, Exec exec = Exec::Parallel);
/// Y′ has pieces (X′,+) and (Z′,−); the result has pieces (X,+) and (Z,−).
BordismCertificate restratify_bordism(const BordismCertificate& Yp, const FilteredComplex& X, const FilteredComplex& Z,
                                      Exec exec = Exec::Parallel);
BordismCertificate cylinder(const FilteredComplex& FX, Exec exec = Exec::Parallel);
/// Identifies piece `label1` of Y1 with piece `label2` of Y2; iso maps piece1 vertices to piece2 vertices
/// (empty: identity when the pieces coincide, otherwise a labeled search).
BordismCertificate glue(const BordismCertificate& Y1, const std::string& label1, const BordismCertificate& Y2,
                        const std::string& label2, const VertexMap& iso = {}, Exec exec = Exec::Parallel);

CornerCertificate corner_unfolding();
/// Nondegenerate, orientation-consistent triangles and boundary paths matched; optionally coherence of wheel × ∂X.
bool verify_corner(const CornerCertificate& c, const SimplicialComplex* boundary = nullptr);

}  // namespace strata
