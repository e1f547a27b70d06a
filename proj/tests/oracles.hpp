#pragma once

// Brute-force reference computations sharing no code with the library beyond its data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Face = std::vector<int>;
using Facets = std::vector<Face>;

constexpr std::uint64_t kBigPrime = 2147483647ull;

inline std::set<Face> all_faces(const Facets& facets) {
  std::set<Face> out;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    const std::size_t m = f.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      Face t;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) t.push_back(f[i]);
      out.insert(t);
    }
  }
  return out;
}

inline std::vector<std::vector<Face>> faces_by_dim(const Facets& facets) {
  std::vector<std::vector<Face>> by;
  for (const auto& f : all_faces(facets)) {
    const std::size_t d = f.size() - 1;
    if (by.size() <= d) by.resize(d + 1);
    by[d].push_back(f);
  }
  return by;
}

inline int euler(const Facets& facets) {
  int chi = 0;
  for (const auto& f : all_faces(facets)) chi += f.size() % 2 == 1 ? 1 : -1;
  return chi;
}

using Dense = std::vector<std::vector<std::uint64_t>>;

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Rank by Gaussian elimination over F_p.
inline std::size_t rank_mod(Dense M, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && M[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[rank]);
    const std::uint64_t inv = pow_mod(M[rank][c], p - 2, p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || M[r][c] % p == 0) continue;
      const std::uint64_t f = M[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) M[r][k] = (M[r][k] + p - f * M[rank][k] % p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Nullspace basis (as columns indexed like M's columns) over F_p.
inline std::vector<std::vector<std::uint64_t>> kernel_mod(Dense M, std::size_t cols, std::uint64_t p) {
  const std::size_t rows = M.size();
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && M[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[rank]);
    const std::uint64_t inv = pow_mod(M[rank][c], p - 2, p);
    for (std::size_t k = 0; k < cols; ++k) M[rank][k] = M[rank][k] * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || M[r][c] % p == 0) continue;
      const std::uint64_t f = M[r][c];
      for (std::size_t k = 0; k < cols; ++k) M[r][k] = (M[r][k] + p - f * M[rank][k] % p) % p;
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - M[r][free] % p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Boundary of the d-faces `cols` into the (d−1)-faces `rows`, entries mod p.
inline Dense boundary_dense(const std::vector<Face>& rows, const std::vector<Face>& cols, std::uint64_t p) {
  std::map<Face, std::size_t> at;
  for (std::size_t i = 0; i < rows.size(); ++i) at[rows[i]] = i;
  Dense M(rows.size(), std::vector<std::uint64_t>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t k = 0; k < cols[j].size(); ++k) {
      Face f = cols[j];
      f.erase(f.begin() + static_cast<long>(k));
      auto it = at.find(f);
      if (it != at.end()) M[it->second][j] = k % 2 == 0 ? 1 : p - 1;
    }
  return M;
}

/// Betti numbers over F_p in degrees 0..dim.
inline std::vector<std::size_t> betti(const Facets& facets, std::uint64_t p) {
  const auto by = faces_by_dim(facets);
  const std::size_t n = by.size();
  std::vector<std::size_t> rk(n + 1, 0);
  for (std::size_t d = 1; d < n; ++d) rk[d] = rank_mod(boundary_dense(by[d - 1], by[d], p), p);
  std::vector<std::size_t> b(n);
  for (std::size_t d = 0; d < n; ++d) b[d] = by[d].size() - rk[d] - rk[d + 1];
  return b;
}

/// Number of Z/p^k summands in integral homology per degree, from F_p and Q Betti numbers.
inline std::vector<std::size_t> p_torsion_counts(const Facets& facets, std::uint64_t p) {
  const auto bq = betti(facets, kBigPrime);
  const auto bp = betti(facets, p);
  std::vector<std::size_t> t(bq.size(), 0);
  std::size_t prev = 0;
  for (std::size_t i = 0; i < bq.size(); ++i) {
    t[i] = bp[i] - bq[i] - prev;
    prev = t[i];
  }
  return t;
}

/// Induced signs cancel on every ridge with two cofaces.
inline bool coherent(const Facets& facets, const std::map<Face, int>& sign) {
  std::map<Face, std::vector<int>> induced;
  for (const auto& f : facets)
    for (std::size_t k = 0; k < f.size(); ++k) {
      Face r = f;
      r.erase(r.begin() + static_cast<long>(k));
      induced[r].push_back(sign.at(f) * (k % 2 == 0 ? 1 : -1));
    }
  for (const auto& [r, s] : induced)
    if (s.size() == 2 && s[0] + s[1] != 0) return false;
  return true;
}

/// Intersection homology over F_p of a filtered complex given by face levels, from the allowable-chain
/// definition: σ is allowable when its largest face in X^{n−k} has dimension ≤ dim σ − k + p(k).
inline std::vector<std::size_t> intersection_betti(const Facets& facets, const std::map<Face, int>& level,
                                                   const std::vector<int>& perversity, std::uint64_t p) {
  const auto by = faces_by_dim(facets);
  const int n = static_cast<int>(by.size()) - 1;
  auto allowable = [&](const Face& s) {
    const int i = static_cast<int>(s.size()) - 1;
    for (int k = 2; k <= n; ++k) {
      int meet = -1;
      const std::size_t m = s.size();
      for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        Face t;
        for (std::size_t j = 0; j < m; ++j)
          if (mask >> j & 1) t.push_back(s[j]);
        if (level.at(t) <= n - k) meet = std::max(meet, static_cast<int>(t.size()) - 1);
      }
      if (meet >= 0 && meet > i - k + perversity[k]) return false;
    }
    return true;
  };
  std::vector<std::vector<Face>> A(n + 1), bad(n + 1);
  for (int d = 0; d <= n; ++d)
    for (const auto& s : by[d]) (allowable(s) ? A[d] : bad[d]).push_back(s);
  // IC_d = chains on A_d whose boundary avoids the non-allowable (d−1)-faces.
  std::vector<std::vector<std::vector<std::uint64_t>>> IC(n + 1);
  for (int d = 0; d <= n; ++d) {
    if (d == 0) {
      for (std::size_t j = 0; j < A[0].size(); ++j) {
        std::vector<std::uint64_t> v(A[0].size(), 0);
        v[j] = 1;
        IC[0].push_back(std::move(v));
      }
      continue;
    }
    IC[d] = kernel_mod(boundary_dense(bad[d - 1], A[d], p), A[d].size(), p);
  }
  auto image = [&](int d) {
    // ∂ of the IC_d basis written in A_{d−1} coordinates.
    const Dense D = boundary_dense(A[d - 1], A[d], p);
    Dense M(A[d - 1].size(), std::vector<std::uint64_t>(IC[d].size(), 0));
    for (std::size_t c = 0; c < IC[d].size(); ++c)
      for (std::size_t r = 0; r < A[d - 1].size(); ++r) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < A[d].size(); ++k) acc = (acc + D[r][k] * IC[d][c][k]) % p;
        M[r][c] = acc;
      }
    return M;
  };
  std::vector<std::size_t> rk(n + 2, 0);
  for (int d = 1; d <= n; ++d) rk[d] = IC[d].empty() || A[d - 1].empty() ? 0 : rank_mod(image(d), p);
  std::vector<std::size_t> out(n + 1);
  for (int d = 0; d <= n; ++d) out[d] = IC[d].size() - rk[d] - rk[d + 1];
  return out;
}

}  // namespace oracle
