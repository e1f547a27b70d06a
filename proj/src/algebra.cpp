#include "strata/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace strata {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Ring Ring::prime_field(std::uint64_t p) {
  if (!is_prime(p) || p >= (1ull << 31)) throw Error(ErrorKind::UnsupportedCoefficients, "F" + std::to_string(p));
  return {Kind::PrimeField, p};
}

Ring Ring::parse(const std::string& s) {
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'Z')) {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error(ErrorKind::UnsupportedCoefficients, s);
      p = p * 10 + static_cast<std::uint64_t>(s[i] - '0');
    }
    return prime_field(p);
  }
  throw Error(ErrorKind::UnsupportedCoefficients, s);
}

std::string Ring::name() const {
  switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p);
  }
  return "?";
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

BigInt SparseMatrix::at(int r, int c) const {
  for (const auto& [row, v] : columns[c])
    if (row == r) return v;
  return 0;
}

void SparseMatrix::set(int r, int c, const BigInt& v) {
  auto& col = columns[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, int row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    if (v == 0) col.erase(it); else it->second = v;
  } else if (v != 0) {
    col.insert(it, {r, v});
  }
}

std::vector<std::vector<BigInt>> SparseMatrix::dense() const {
  std::vector<std::vector<BigInt>> d(rows, std::vector<BigInt>(cols, 0));
  for (int c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[c]) d[r][c] = v;
  return d;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<BigInt>>& d) {
  SparseMatrix M(static_cast<int>(d.size()), d.empty() ? 0 : static_cast<int>(d[0].size()));
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < M.cols; ++c)
      if (d[r][c] != 0) M.columns[c].push_back({r, d[r][c]});
  return M;
}

SparseMatrix multiply(const SparseMatrix& A, const SparseMatrix& B) {
  if (A.cols != B.rows) throw Error(ErrorKind::DimensionOutOfRange, "multiply shape mismatch");
  SparseMatrix C(A.rows, B.cols);
  for (int j = 0; j < B.cols; ++j) {
    std::map<int, BigInt> acc;
    for (const auto& [k, b] : B.columns[j])
      for (const auto& [i, a] : A.columns[k]) acc[i] += a * b;
    for (auto& [i, v] : acc)
      if (v != 0) C.columns[j].push_back({i, v});
  }
  return C;
}

namespace {

struct Overflow {};

/// Checked 64-bit arithmetic; throws Overflow.
struct Checked {
  static long long mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static long long sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
};

template <class T>
T to_scalar(const BigInt& v) {
  if constexpr (std::is_same_v<T, long long>) {
    if (v > BigInt(std::numeric_limits<long long>::max()) || v < BigInt(std::numeric_limits<long long>::min() + 1))
      throw Overflow{};
    return static_cast<long long>(v);
  } else {
    return v;
  }
}

template <class T>
T s_mul(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, long long>) return Checked::mul(a, b); else return a * b;
}

template <class T>
T s_sub(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, long long>) return Checked::sub(a, b); else return a - b;
}

template <class T>
T s_abs(const T& a) {
  if constexpr (std::is_same_v<T, long long>) return a < 0 ? -a : a; else return boost::multiprecision::abs(a);
}

template <class T>
using Col = std::vector<std::pair<int, T>>;

/// target <- target − q * src, both sorted by row.
template <class T>
void axpy(Col<T>& target, const Col<T>& src, const T& q, std::vector<std::vector<int>>* row_cols, int target_id) {
  Col<T> out;
  out.reserve(target.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < src.size()) {
    if (j == src.size() || (i < target.size() && target[i].first < src[j].first)) {
      out.push_back(std::move(target[i++]));
    } else if (i == target.size() || src[j].first < target[i].first) {
      T v = s_sub<T>(T(0), s_mul<T>(q, src[j].second));
      if (row_cols) (*row_cols)[src[j].first].push_back(target_id);
      out.push_back({src[j].first, std::move(v)});
      ++j;
    } else {
      T v = s_sub<T>(target[i].second, s_mul<T>(q, src[j].second));
      if (v != 0) out.push_back({target[i].first, std::move(v)});
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

template <class T>
const T* entry_at(const Col<T>& c, int row) {
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == row) return &it->second;
  return nullptr;
}

/// Dense Smith reduction with optional unimodular tracking; returns diagonal with divisibility.
template <class T>
std::vector<T> dense_snf(std::vector<std::vector<T>>& a, std::vector<std::vector<T>>* U,
                         std::vector<std::vector<T>>* V) {
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  auto row_op = [&](int dst, int src, const T& q) {  // row dst -= q * row src
    if (q == 0) return;
    for (int j = 0; j < n; ++j)
      if (a[src][j] != 0) a[dst][j] = s_sub<T>(a[dst][j], s_mul<T>(q, a[src][j]));
    if (U)
      for (std::size_t j = 0; j < (*U)[0].size(); ++j)
        if ((*U)[src][j] != 0) (*U)[dst][j] = s_sub<T>((*U)[dst][j], s_mul<T>(q, (*U)[src][j]));
  };
  auto col_op = [&](int dst, int src, const T& q) {  // col dst -= q * col src
    if (q == 0) return;
    for (int i = 0; i < m; ++i)
      if (a[i][src] != 0) a[i][dst] = s_sub<T>(a[i][dst], s_mul<T>(q, a[i][src]));
    if (V)
      for (std::size_t i = 0; i < V->size(); ++i)
        if ((*V)[i][src] != 0) (*V)[i][dst] = s_sub<T>((*V)[i][dst], s_mul<T>(q, (*V)[i][src]));
  };
  auto swap_rows = [&](int x, int y) {
    if (x == y) return;
    std::swap(a[x], a[y]);
    if (U) std::swap((*U)[x], (*U)[y]);
  };
  auto swap_cols = [&](int x, int y) {
    if (x == y) return;
    for (int i = 0; i < m; ++i) std::swap(a[i][x], a[i][y]);
    if (V)
      for (auto& row : *V) std::swap(row[x], row[y]);
  };
  std::vector<T> diag;
  for (int t = 0; t < std::min(m, n); ++t) {
    int bi = -1, bj = -1;
    T best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (a[i][j] != 0 && (bi < 0 || s_abs(a[i][j]) < best)) {
          best = s_abs(a[i][j]);
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    swap_rows(t, bi);
    swap_cols(t, bj);
    while (true) {
      bool dirty = false;
      for (int i = t + 1; i < m; ++i)
        if (a[i][t] != 0) row_op(i, t, T(a[i][t] / a[t][t]));
      for (int j = t + 1; j < n; ++j)
        if (a[t][j] != 0) col_op(j, t, T(a[t][j] / a[t][t]));
      int si = -1, sj = -1;
      T sv = 0;
      for (int i = t + 1; i < m; ++i)
        if (a[i][t] != 0 && (si < 0 || s_abs(a[i][t]) < sv)) { sv = s_abs(a[i][t]); si = i; sj = t; }
      for (int j = t + 1; j < n; ++j)
        if (a[t][j] != 0 && (si < 0 || s_abs(a[t][j]) < sv)) { sv = s_abs(a[t][j]); si = t; sj = j; }
      if (si >= 0) {
        if (sj == t) swap_rows(t, si); else swap_cols(t, sj);
        dirty = true;
      } else {
        for (int i = t + 1; i < m && !dirty; ++i)
          for (int j = t + 1; j < n; ++j)
            if (a[i][j] % a[t][t] != 0) {
              row_op(t, i, T(-1));
              dirty = true;
              break;
            }
      }
      if (!dirty) break;
    }
    if (a[t][t] < 0) {
      for (int j = 0; j < n; ++j) a[t][j] = -a[t][j];
      if (U)
        for (auto& x : (*U)[t]) x = -x;
    }
    diag.push_back(a[t][t]);
  }
  return diag;
}

template <class T>
std::vector<BigInt> factors_impl(const SparseMatrix& M) {
  const int R = M.rows, C = M.cols;
  std::vector<Col<T>> cols(C);
  std::vector<std::vector<int>> row_cols(R);
  for (int c = 0; c < C; ++c) {
    cols[c].reserve(M.columns[c].size());
    for (const auto& [r, v] : M.columns[c]) {
      cols[c].push_back({r, to_scalar<T>(v)});
      row_cols[r].push_back(c);
    }
  }
  std::vector<char> col_alive(C, 1), row_alive(R, 1);
  std::size_t units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<int> order;
    for (int c = 0; c < C; ++c)
      if (col_alive[c] && !cols[c].empty()) order.push_back(c);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cols[a].size() < cols[b].size(); });
    for (int c : order) {
      if (!col_alive[c] || cols[c].empty()) continue;
      int pr = -1;
      std::size_t best = 0;
      T pv = 0;
      for (const auto& [r, v] : cols[c]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cnt = row_cols[r].size();
        if (pr < 0 || cnt < best) { pr = r; best = cnt; pv = v; }
      }
      if (pr < 0) continue;
      std::vector<int> targets;
      for (int c2 : row_cols[pr])
        if (c2 != c && col_alive[c2]) targets.push_back(c2);
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      for (int c2 : targets) {
        const T* e = entry_at(cols[c2], pr);
        if (!e) continue;
        T q = s_mul<T>(*e, pv);
        axpy<T>(cols[c2], cols[c], q, &row_cols, c2);
      }
      col_alive[c] = 0;
      row_alive[pr] = 0;
      cols[c].clear();
      row_cols[pr].clear();
      ++units;
      progress = true;
    }
    for (auto& rc : row_cols) {
      std::sort(rc.begin(), rc.end());
      rc.erase(std::unique(rc.begin(), rc.end()), rc.end());
      rc.erase(std::remove_if(rc.begin(), rc.end(), [&](int c) { return !col_alive[c]; }), rc.end());
    }
  }
  std::vector<int> rem_cols, rem_rows;
  std::vector<int> row_pos(R, -1);
  for (int c = 0; c < C; ++c)
    if (col_alive[c] && !cols[c].empty()) {
      rem_cols.push_back(c);
      for (const auto& [r, v] : cols[c])
        if (row_pos[r] < 0) { row_pos[r] = 0; rem_rows.push_back(r); }
    }
  std::sort(rem_rows.begin(), rem_rows.end());
  for (std::size_t i = 0; i < rem_rows.size(); ++i) row_pos[rem_rows[i]] = static_cast<int>(i);
  std::vector<BigInt> out(units, BigInt(1));
  if (!rem_cols.empty()) {
    std::vector<std::vector<T>> d(rem_rows.size(), std::vector<T>(rem_cols.size(), T(0)));
    for (std::size_t j = 0; j < rem_cols.size(); ++j)
      for (const auto& [r, v] : cols[rem_cols[j]]) d[row_pos[r]][j] = v;
    for (auto& x : dense_snf<T>(d, nullptr, nullptr)) out.push_back(BigInt(x));
  }
  return out;
}

}  // namespace

std::vector<BigInt> invariant_factors(const SparseMatrix& M) {
  try {
    return factors_impl<long long>(M);
  } catch (const Overflow&) {
    return factors_impl<BigInt>(M);
  }
}

SNFResult smith_normal_form(const SparseMatrix& M, bool with_certificates) {
  SNFResult r;
  if (!with_certificates) {
    r.factors = invariant_factors(M);
    return r;
  }
  auto a = M.dense();
  std::vector<std::vector<BigInt>> U(M.rows, std::vector<BigInt>(M.rows, 0));
  std::vector<std::vector<BigInt>> V(M.cols, std::vector<BigInt>(M.cols, 0));
  for (int i = 0; i < M.rows; ++i) U[i][i] = 1;
  for (int i = 0; i < M.cols; ++i) V[i][i] = 1;
  r.factors = dense_snf<BigInt>(a, &U, &V);
  r.has_certificates = true;
  r.U = std::move(U);
  r.V = std::move(V);
  r.D = std::move(a);
  return r;
}

bool verify_snf_certificates(const SparseMatrix& M, const SNFResult& r) {
  if (!r.has_certificates) return false;
  const int m = M.rows, n = M.cols;
  auto A = M.dense();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt s = 0;
      for (int k = 0; k < m; ++k) {
        if (r.U[i][k] == 0) continue;
        for (int l = 0; l < n; ++l)
          if (A[k][l] != 0 && r.V[l][j] != 0) s += r.U[i][k] * A[k][l] * r.V[l][j];
      }
      BigInt expect = (i == j && i < static_cast<int>(r.factors.size())) ? r.factors[i] : BigInt(0);
      if (s != expect) return false;
    }
  for (std::size_t i = 1; i < r.factors.size(); ++i)
    if (r.factors[i] % r.factors[i - 1] != 0) return false;
  return true;
}

std::size_t rank_mod_p(const SparseMatrix& M, std::uint64_t p) {
  const int R = M.rows, C = M.cols;
  using U64 = std::uint64_t;
  std::vector<std::vector<std::pair<int, U64>>> cols(C);
  std::vector<std::vector<int>> row_cols(R);
  auto mod = [p](const BigInt& v) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<U64>(r);
  };
  for (int c = 0; c < C; ++c)
    for (const auto& [r, v] : M.columns[c]) {
      U64 x = mod(v);
      if (x) {
        cols[c].push_back({r, x});
        row_cols[r].push_back(c);
      }
    }
  auto inv = [p](U64 a) {
    U64 result = 1, e = p - 2, b = a;
    while (e) {
      if (e & 1) result = static_cast<U64>((unsigned __int128)result * b % p);
      b = static_cast<U64>((unsigned __int128)b * b % p);
      e >>= 1;
    }
    return result;
  };
  std::vector<char> alive(C, 1);
  std::vector<int> order(C);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cols[a].size() < cols[b].size(); });
  std::size_t rank = 0;
  for (int c : order) {
    if (cols[c].empty()) continue;
    int pr = -1;
    std::size_t best = 0;
    U64 pv = 0;
    for (const auto& [r, v] : cols[c]) {
      std::size_t cnt = row_cols[r].size();
      if (pr < 0 || cnt < best) { pr = r; best = cnt; pv = v; }
    }
    const U64 pinv = inv(pv);
    std::vector<int> targets = row_cols[pr];
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int c2 : targets) {
      if (c2 == c || !alive[c2]) continue;
      auto& tc = cols[c2];
      auto it = std::lower_bound(tc.begin(), tc.end(), pr, [](const auto& e, int r) { return e.first < r; });
      if (it == tc.end() || it->first != pr) continue;
      const U64 q = static_cast<U64>((unsigned __int128)it->second * pinv % p);
      std::vector<std::pair<int, U64>> out;
      std::size_t i = 0, j = 0;
      const auto& src = cols[c];
      while (i < tc.size() || j < src.size()) {
        if (j == src.size() || (i < tc.size() && tc[i].first < src[j].first)) {
          out.push_back(tc[i++]);
        } else if (i == tc.size() || src[j].first < tc[i].first) {
          U64 v = (p - static_cast<U64>((unsigned __int128)q * src[j].second % p)) % p;
          row_cols[src[j].first].push_back(c2);
          out.push_back({src[j].first, v});
          ++j;
        } else {
          U64 sub = static_cast<U64>((unsigned __int128)q * src[j].second % p);
          U64 v = (tc[i].second + p - sub) % p;
          if (v) out.push_back({tc[i].first, v});
          ++i;
          ++j;
        }
      }
      tc = std::move(out);
    }
    alive[c] = 0;
    cols[c].clear();
    row_cols[pr].clear();
    ++rank;
  }
  return rank;
}

std::size_t rank_over(const SparseMatrix& M, const Ring& ring) {
  if (ring.kind == Ring::Kind::PrimeField) return rank_mod_p(M, ring.p);
  return invariant_factors(M).size();
}

SparseMatrix integer_kernel_basis(const SparseMatrix& M) {
  struct Work {
    std::map<int, BigInt> n;
    std::map<int, BigInt> v;
  };
  std::vector<Work> work;
  SparseMatrix K(M.cols, 0);
  std::vector<std::vector<std::pair<int, BigInt>>> basis;
  for (int c = 0; c < M.cols; ++c) {
    if (M.columns[c].empty()) {
      basis.push_back({{c, BigInt(1)}});
      continue;
    }
    Work w;
    for (const auto& [r, val] : M.columns[c]) w.n[r] = val;
    w.v[c] = 1;
    work.push_back(std::move(w));
  }
  std::vector<char> retired(work.size(), 0);
  for (int r = 0; r < M.rows; ++r) {
    while (true) {
      int piv = -1;
      int count = 0;
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (retired[i]) continue;
        auto it = work[i].n.find(r);
        if (it == work[i].n.end()) continue;
        ++count;
        if (piv < 0 || boost::multiprecision::abs(it->second) < boost::multiprecision::abs(work[piv].n.at(r)))
          piv = static_cast<int>(i);
      }
      if (count == 0) break;
      if (count == 1) {
        retired[piv] = 1;
        break;
      }
      const BigInt pv = work[piv].n.at(r);
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (retired[i] || static_cast<int>(i) == piv) continue;
        auto it = work[i].n.find(r);
        if (it == work[i].n.end()) continue;
        const BigInt q = it->second / pv;
        if (q == 0) continue;
        for (const auto& [rr, x] : work[piv].n) {
          BigInt& y = work[i].n[rr];
          y -= q * x;
          if (y == 0) work[i].n.erase(rr);
        }
        for (const auto& [cc, x] : work[piv].v) {
          BigInt& y = work[i].v[cc];
          y -= q * x;
          if (y == 0) work[i].v.erase(cc);
        }
      }
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (retired[i]) continue;
    std::vector<std::pair<int, BigInt>> col(work[i].v.begin(), work[i].v.end());
    basis.push_back(std::move(col));
  }
  std::sort(basis.begin(), basis.end());
  K.cols = static_cast<int>(basis.size());
  K.columns = std::move(basis);
  return K;
}

SparseMatrix boundary_matrix(const SimplicialComplex& K, int i) {
  if (i < 0 || i > K.dimension()) throw Error(ErrorKind::DimensionOutOfRange, "boundary degree " + std::to_string(i));
  const auto& L = K.faces();
  const int cols = static_cast<int>(L.by_dim[i].size());
  if (i == 0) return SparseMatrix(0, cols);
  SparseMatrix M(static_cast<int>(L.by_dim[i - 1].size()), cols);
  for (int c = 0; c < cols; ++c) {
    const auto& s = L.by_dim[i][c];
    auto& col = M.columns[c];
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex f = s;
      f.erase(f.begin() + k);
      col.push_back({L.index[i - 1].at(f), BigInt(k % 2 == 0 ? 1 : -1)});
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return M;
}

SparseMatrix submatrix(const SparseMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> pos(M.rows, -1);
  for (std::size_t i = 0; i < rows.size(); ++i) pos[rows[i]] = static_cast<int>(i);
  SparseMatrix S(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [r, v] : M.columns[cols[j]])
      if (pos[r] >= 0) S.columns[j].push_back({pos[r], v});
    std::sort(S.columns[j].begin(), S.columns[j].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return S;
}

std::vector<HomologyGroup> homology(const SimplicialComplex& K, const Ring& ring, bool reduced, Exec exec) {
  std::vector<HomologyGroup> out;
  if (K.is_empty()) {
    if (reduced) out.push_back({-1, 1, {}});
    return out;
  }
  const int n = K.dimension();
  const auto& L = K.faces();
  // rank and integral factors of d_i for i = 1..n
  std::vector<std::size_t> rk(n + 2, 0);
  std::vector<std::vector<BigInt>> facs(n + 2);
  auto work = [&](int i) {
    SparseMatrix B = boundary_matrix(K, i);
    if (ring.kind == Ring::Kind::PrimeField) {
      rk[i] = rank_mod_p(B, ring.p);
    } else {
      facs[i] = invariant_factors(B);
      rk[i] = facs[i].size();
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 1; i <= n; ++i) work(i);
  } else {
    for (int i = 1; i <= n; ++i) work(i);
  }
  for (int i = 0; i <= n; ++i) {
    HomologyGroup g;
    g.degree = i;
    g.rank = L.by_dim[i].size() - rk[i] - rk[i + 1];
    if (ring.kind == Ring::Kind::Integers)
      for (const auto& f : facs[i + 1])
        if (f > 1) g.torsion.push_back(f);
    out.push_back(std::move(g));
  }
  if (reduced) out[0].rank -= 1;
  return out;
}

int euler_characteristic(const SimplicialComplex& K, bool mod2) {
  const int chi = euler_characteristic_faces(K);
  if (!mod2) return chi;
  return ((chi % 2) + 2) % 2;
}

int euler_characteristic_homology(const SimplicialComplex& K) {
  int chi = 0;
  for (const auto& g : homology(K, Ring::rationals())) chi += (g.degree % 2 == 0 ? 1 : -1) * static_cast<int>(g.rank);
  return chi;
}

bool is_homology_sphere(const SimplicialComplex& K, int d) {
  if (d < 0) return K.is_empty();
  if (K.is_empty() || K.dimension() != d) return false;
  auto h = homology(K, Ring::integers(), true, Exec::Serial);
  for (const auto& g : h) {
    if (!g.torsion.empty()) return false;
    if (g.degree < d && g.rank != 0) return false;
    if (g.degree == d && g.rank != 1) return false;
  }
  return true;
}

bool is_acyclic(const SimplicialComplex& K) {
  if (K.is_empty()) return false;
  for (const auto& g : homology(K, Ring::integers(), true, Exec::Serial))
    if (g.rank != 0 || !g.torsion.empty()) return false;
  return true;
}

}  // namespace strata
