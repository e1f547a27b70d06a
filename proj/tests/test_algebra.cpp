#include "doctest.h"
#include "helpers.hpp"
#include "strata/algebra.hpp"

using namespace strata;
using namespace testing_support;

namespace {

HomologyGroup group(int d, std::size_t r, std::vector<int> t = {}) {
  HomologyGroup g;
  g.degree = d;
  g.rank = r;
  for (int q : t) g.torsion.emplace_back(q);
  return g;
}

}  // namespace

TEST_CASE("Smith normal form of a small integer matrix with certificates") {
  const auto M = SparseMatrix::from_dense({{2, 4}, {6, 8}});
  const SNFResult r = smith_normal_form(M, true);
  CHECK(r.factors == std::vector<BigInt>{2, 4});
  CHECK(verify_snf_certificates(M, r));
  CHECK(invariant_factors(M) == r.factors);
  const auto Z = SparseMatrix::from_dense({{0, 0}, {0, 0}});
  CHECK(smith_normal_form(Z).factors.empty());
}

TEST_CASE("Smith normal form of boundary matrices matches ranks") {
  const auto K = catalog::rp3_11();
  for (int i = 1; i <= 3; ++i) {
    const auto D = boundary_matrix(K, i);
    const auto f = invariant_factors(D);
    CHECK(f.size() == rank_mod_p(D, oracle::kBigPrime));
    CHECK(rank_over(D, Ring::rationals()) == f.size());
  }
}

TEST_CASE("ranks mod p agree with the dense oracle") {
  for (const auto& K : {catalog::torus7(), catalog::rp2_6(), catalog::rp3_11()}) {
    const auto by = oracle::faces_by_dim(facets_of(K));
    for (int d = 1; d <= K.dimension(); ++d)
      for (std::uint64_t p : {std::uint64_t{2}, std::uint64_t{3}, oracle::kBigPrime})
        CHECK(rank_mod_p(boundary_matrix(K, d), p) == oracle::rank_mod(oracle::boundary_dense(by[d - 1], by[d], p), p));
  }
}

TEST_CASE("golden homology table") {
  using G = std::vector<HomologyGroup>;
  CHECK(homology(catalog::torus7(), Ring::integers()) == G{group(0, 1), group(1, 2), group(2, 1)});
  CHECK(homology(catalog::rp2_6(), Ring::integers()) == G{group(0, 1), group(1, 0, {2}), group(2, 0)});
  CHECK(homology(catalog::rp2_6(), Ring::prime_field(2)) == G{group(0, 1), group(1, 1), group(2, 1)});
  CHECK(homology(catalog::rp2_6(), Ring::rationals()) == G{group(0, 1), group(1, 0), group(2, 0)});
  CHECK(homology(catalog::rp3_11(), Ring::integers()) == G{group(0, 1), group(1, 0, {2}), group(2, 0), group(3, 1)});
  CHECK(homology(catalog::rp3_11(), Ring::prime_field(2)) == G{group(0, 1), group(1, 1), group(2, 1), group(3, 1)});
  CHECK(homology(catalog::torus3(), Ring::integers()) == G{group(0, 1), group(1, 3), group(2, 3), group(3, 1)});
  for (int n = 1; n <= 4; ++n) {
    const auto h = homology(catalog::sphere(n), Ring::integers());
    for (int d = 0; d <= n; ++d) CHECK(h[d] == group(d, d == 0 || d == n ? 1 : 0));
  }
}

TEST_CASE("homology over Q and F_p agrees with the oracle on the catalog") {
  for (const auto& name : catalog::list()) {
    const auto& e = catalog::get(name);
    if (e.complex.faces().total > 3000) continue;
    const auto fs = facets_of(e.complex);
    CHECK_MESSAGE(ranks(homology(e.complex, Ring::rationals())) == oracle::betti(fs, oracle::kBigPrime), name);
    CHECK_MESSAGE(ranks(homology(e.complex, Ring::prime_field(2))) == oracle::betti(fs, 2), name);
    CHECK_MESSAGE(ranks(homology(e.complex, Ring::prime_field(3))) == oracle::betti(fs, 3), name);
  }
}

TEST_CASE("universal coefficients: F_p rank is Q rank plus p-torsion in degrees i and i-1") {
  for (const auto& name : catalog::list()) {
    const auto& e = catalog::get(name);
    if (e.complex.faces().total > 3000) continue;
    const auto hz = homology(e.complex, Ring::integers());
    for (std::uint64_t p : {2ull, 3ull}) {
      const auto hp = homology(e.complex, Ring::prime_field(p));
      auto count = [&](int d) {
        if (d < 0) return std::size_t{0};
        std::size_t c = 0;
        for (const auto& t : hz[d].torsion)
          if (t % p == 0) ++c;
        return c;
      };
      for (std::size_t d = 0; d < hz.size(); ++d)
        CHECK(hp[d].rank == hz[d].rank + count(static_cast<int>(d)) + count(static_cast<int>(d) - 1));
      const auto t = oracle::p_torsion_counts(facets_of(e.complex), p);
      for (std::size_t d = 0; d < hz.size(); ++d) CHECK(count(static_cast<int>(d)) == t[d]);
    }
  }
}

TEST_CASE("Euler characteristic from faces equals that from ranks") {
  for (const auto& name : catalog::list()) {
    const auto& e = catalog::get(name);
    CHECK_MESSAGE(euler_characteristic_faces(e.complex) == euler_characteristic_homology(e.complex), name);
    CHECK(euler_characteristic_faces(e.complex) == e.euler);
  }
}

TEST_CASE("reduced homology and sphere detection") {
  const auto h = homology(catalog::sphere(3), Ring::integers(), true);
  CHECK(h[0].rank == 0);
  CHECK(is_homology_sphere(catalog::sphere(3), 3));
  CHECK_FALSE(is_homology_sphere(catalog::torus3(), 3));
  CHECK(is_acyclic(cone(catalog::rp2_6()).complex));
  CHECK_FALSE(is_acyclic(catalog::rp2_6()));
}

TEST_CASE("serial and parallel homology agree") {
  for (const auto& name : {"T3", "Sigma-T3", "RP3"}) {
    const auto& K = catalog::get(name).complex;
    CHECK(homology(K, Ring::integers(), false, Exec::Serial) == homology(K, Ring::integers(), false, Exec::Parallel));
  }
}

TEST_CASE("integer kernels are kernels") {
  const auto D2 = boundary_matrix(catalog::torus7(), 2);
  const auto Kb = integer_kernel_basis(D2);
  CHECK(Kb.cols == 1);
  CHECK(multiply(D2, Kb).nnz() == 0);
}

TEST_CASE("rings parse by name") {
  CHECK(Ring::parse("Z") == Ring::integers());
  CHECK(Ring::parse("Q") == Ring::rationals());
  CHECK(Ring::parse("F2") == Ring::prime_field(2));
  CHECK_THROWS_AS(Ring::parse("F4"), Error);
  CHECK_THROWS_AS(Ring::parse("R"), Error);
}
