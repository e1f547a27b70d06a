#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "strata/complex.hpp"

namespace strata {

using BigInt = boost::multiprecision::cpp_int;

struct Ring {
  enum class Kind { Integers, Rationals, PrimeField };
  Kind kind = Kind::Integers;
  std::uint64_t p = 0;

  static Ring integers() { return {Kind::Integers, 0}; }
  static Ring rationals() { return {Kind::Rationals, 0}; }
  /// Throws UnsupportedCoefficients unless p is prime.
  static Ring prime_field(std::uint64_t p);
  /// Accepts Z, Q, F<p>, Z<p>.
  static Ring parse(const std::string& s);
  std::string name() const;
  bool is_field() const { return kind != Kind::Integers; }
  bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }
};

/// Column-major sparse integer matrix; each column sorted by row, no explicit zeros.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, BigInt>>> columns;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}
  std::size_t nnz() const;
  BigInt at(int r, int c) const;
  void set(int r, int c, const BigInt& v);
  std::vector<std::vector<BigInt>> dense() const;
  static SparseMatrix from_dense(const std::vector<std::vector<BigInt>>& d);
};

SparseMatrix multiply(const SparseMatrix& A, const SparseMatrix& B);

struct SNFResult {
  /// Nonzero diagonal entries d1 | d2 | ..., all positive.
  std::vector<BigInt> factors;
  bool has_certificates = false;
  /// Dense unimodular certificates with U * M * V = D.
  std::vector<std::vector<BigInt>> U, V, D;
  std::size_t rank() const { return factors.size(); }
};

/// Invariant factors; with certificates also U, V (dense, intended for moderate sizes).
SNFResult smith_normal_form(const SparseMatrix& M, bool with_certificates = false);
bool verify_snf_certificates(const SparseMatrix& M, const SNFResult& r);
/// Invariant factors only, via sparse unit-pivot elimination followed by dense gcd reduction.
std::vector<BigInt> invariant_factors(const SparseMatrix& M);
std::size_t rank_mod_p(const SparseMatrix& M, std::uint64_t p);
std::size_t rank_over(const SparseMatrix& M, const Ring& ring);

/// Z-basis of the integer kernel, as columns (sparse, length M.cols).
SparseMatrix integer_kernel_basis(const SparseMatrix& M);

/// i-chains -> (i−1)-chains with signs from sorted vertex order; i = 0 gives a 0-row matrix.
SparseMatrix boundary_matrix(const SimplicialComplex& K, int i);
/// Restriction to chosen rows (i−1-faces) and columns (i-faces), by local indices.
SparseMatrix submatrix(const SparseMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols);

struct HomologyGroup {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
  bool operator==(const HomologyGroup& o) const {
    return degree == o.degree && rank == o.rank && torsion == o.torsion;
  }
};

enum class Exec { Serial, Parallel };

std::vector<HomologyGroup> homology(const SimplicialComplex& K, const Ring& ring, bool reduced = false,
                                    Exec exec = Exec::Parallel);
int euler_characteristic(const SimplicialComplex& K, bool mod2 = false);
/// Alternating sum of ranks over Q.
int euler_characteristic_homology(const SimplicialComplex& K);
/// Reduced integral homology of a d-sphere.
bool is_homology_sphere(const SimplicialComplex& K, int d);
bool is_acyclic(const SimplicialComplex& K);

}  // namespace strata
