#include "strata/ih.hpp"

#include <cstdlib>
#include <exception>
#include <numeric>
#include <sstream>

namespace strata {

int Perversity::at(int k) const {
  if (k < 2) return 0;
  if (k > max_codim()) throw Error(ErrorKind::PerversityViolation, "no value at codimension " + std::to_string(k));
  return values[k];
}

bool Perversity::is_gm() const {
  if (max_codim() < 2) return true;
  if (values[2] != 0) return false;
  for (int k = 2; k < max_codim(); ++k)
    if (values[k + 1] < values[k] || values[k + 1] > values[k] + 1) return false;
  return true;
}

bool Perversity::operator<=(const Perversity& o) const {
  for (int k = 2; k <= std::min(max_codim(), o.max_codim()); ++k)
    if (values[k] > o.values[k]) return false;
  return true;
}

namespace {

Perversity make(int n, std::string name, int (*f)(int)) {
  Perversity p;
  p.name = std::move(name);
  p.values.assign(std::max(n, 1) + 1, 0);
  for (int k = 2; k <= n; ++k) p.values[k] = f(k);
  return p;
}

}  // namespace

Perversity lower_middle(int n) {
  return make(n, "m", [](int k) { return (k - 2) / 2; });
}
Perversity upper_middle(int n) {
  return make(n, "n", [](int k) { return (k - 1) / 2; });
}
Perversity zero_perversity(int n) {
  return make(n, "0", [](int) { return 0; });
}
Perversity top_perversity(int n) {
  return make(n, "t", [](int k) { return k - 2; });
}

Perversity parse_perversity(const std::string& s, int n) {
  if (s == "m" || s == "lower-middle") return lower_middle(n);
  if (s == "n" || s == "upper-middle") return upper_middle(n);
  if (s == "0" || s == "zero") return zero_perversity(n);
  if (s == "t" || s == "top") return top_perversity(n);
  Perversity p;
  p.name = s;
  p.values.assign(2, 0);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      p.values.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "perversity value '" + item + "'");
    }
  }
  return p;
}

AllowabilityTable allowability(const FilteredComplex& FX, const Perversity& p) {
  const int n = FX.dim();
  const auto& F = FX.complex.faces();
  const std::vector<int> lv = FX.level_table();
  AllowabilityTable T;
  T.meet_dim.assign(F.total, std::vector<int>(std::max(n, 1) + 1, -1));
  T.allowable.assign(F.total, 1);
  for (int id = 0; id < F.total; ++id) {
    const Simplex& s = F.by_global(id);
    const int i = simplex_dim(s);
    for (int k = 2; k <= n; ++k) {
      int count = 0;
      for (Vertex v : s)
        if (lv[F.global_id({v})] <= n - k) ++count;
      T.meet_dim[id][k] = count - 1;
      if (count > 0 && count - 1 > i - k + p.at(k)) T.allowable[id] = 0;
    }
  }
  return T;
}

FilteredComplex make_full(const FilteredComplex& FX) {
  int limit = 2;
  if (const char* e = std::getenv("STRATA_SUBDIV_LIMIT")) limit = std::atoi(e);
  FilteredComplex cur = FX;
  for (int round = 0; !is_full(cur); ++round) {
    if (round >= limit) throw Error(ErrorKind::SubdivisionLimit, "filtration still not full after subdivision");
    cur = subdivide(cur);
  }
  return cur;
}

namespace {

struct Prepared {
  FilteredComplex FX;
  std::vector<std::vector<int>> allowed;
  std::vector<std::vector<int>> forbidden;
};

Prepared prepare(const FilteredComplex& input, const Perversity& p) {
  if (!input.classical) throw Error(ErrorKind::NotValidated, "intersection homology needs a classical filtration");
  const int n = input.dim();
  if (!input.complex.is_empty() && static_cast<int>(input.skeleta.size()) != n + 1)
    throw Error(ErrorKind::NotValidated, "filtration has the wrong number of skeleta");
  if (!p.is_gm()) throw Error(ErrorKind::PerversityViolation, "perversity " + p.name + " violates the growth condition");
  if (n >= 2 && p.max_codim() < n)
    throw Error(ErrorKind::PerversityViolation, "perversity " + p.name + " undefined in codimension " + std::to_string(n));
  Prepared P{make_full(input), {}, {}};
  const auto& F = P.FX.complex.faces();
  const AllowabilityTable T = allowability(P.FX, p);
  P.allowed.resize(n + 1);
  P.forbidden.resize(n + 1);
  for (int d = 0; d <= n; ++d)
    for (int i = 0; i < static_cast<int>(F.by_dim[d].size()); ++i)
      (T.allowable[F.offset[d] + i] ? P.allowed : P.forbidden)[d].push_back(i);
  return P;
}

}  // namespace

std::vector<IHGroup> intersection_homology(const FilteredComplex& FX, const Perversity& p, const Ring& ring,
                                           Exec exec) {
  if (FX.complex.is_empty()) return {};
  const Prepared P = prepare(FX, p);
  const SimplicialComplex& K = P.FX.complex;
  const int n = K.dimension();
  const Ring rank_ring = ring.is_field() ? ring : Ring::rationals();
  std::vector<std::size_t> rD(n + 2, 0), rF(n + 2, 0);
  std::vector<std::vector<BigInt>> tors(n + 1);
  std::exception_ptr err;
  auto work = [&](int i) {
    const SparseMatrix bd = boundary_matrix(K, i);
    std::vector<int> all_rows(bd.rows);
    std::iota(all_rows.begin(), all_rows.end(), 0);
    const SparseMatrix D = submatrix(bd, all_rows, P.allowed[i]);
    const SparseMatrix Fm = i > 0 ? submatrix(bd, P.forbidden[i - 1], P.allowed[i]) : SparseMatrix(0, D.cols);
    rD[i] = rank_over(D, rank_ring);
    rF[i] = rank_over(Fm, rank_ring);
    if (ring.kind == Ring::Kind::Integers && i > 0) {
      const SparseMatrix ker = integer_kernel_basis(Fm);
      const SparseMatrix G = multiply(D, ker);
      std::vector<int> cols(G.cols);
      std::iota(cols.begin(), cols.end(), 0);
      const SparseMatrix Gr = submatrix(G, P.allowed[i - 1], cols);
      for (const auto& f : invariant_factors(Gr))
        if (f > 1) tors[i - 1].push_back(f);
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i <= n; ++i) {
      try {
        work(i);
      } catch (...) {
#pragma omp critical(strata_ih_err)
        if (!err) err = std::current_exception();
      }
    }
  } else {
    for (int i = 0; i <= n; ++i) work(i);
  }
  if (err) std::rethrow_exception(err);
  std::vector<IHGroup> out;
  for (int i = 0; i <= n; ++i) {
    IHGroup g;
    g.degree = i;
    g.rank = P.allowed[i].size() - rD[i] - rD[i + 1] + rF[i + 1];
    if (ring.kind == Ring::Kind::Integers) g.torsion = tors[i];
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<BigInt> ih_torsion(const FilteredComplex& FX, const Perversity& p, int degree) {
  for (const auto& g : intersection_homology(FX, p, Ring::integers()))
    if (g.degree == degree) return g.torsion;
  throw Error(ErrorKind::DimensionOutOfRange, "degree " + std::to_string(degree));
}

}  // namespace strata
