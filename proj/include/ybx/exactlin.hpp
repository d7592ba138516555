#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ybx/error.hpp"
#include "ybx/ring.hpp"
#include "ybx/span.hpp"

namespace ybx {

// Sparse exact matrix. Stored entries are nonzero; all scalars share the ring
// the matrix is used with.
template <class Ring>
struct ExactMatrix {
  using Scalar = typename Ring::Elem;
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, Scalar> entries;

  ExactMatrix() = default;
  ExactMatrix(int r, int c) : rows(r), cols(c) {}

  void set(const Ring& ring, int i, int j, const Scalar& v) {
    if (ring.is_zero(v)) entries.erase({i, j});
    else entries[{i, j}] = v;
  }
  void add(const Ring& ring, int i, int j, const Scalar& v) {
    auto it = entries.find({i, j});
    if (it == entries.end()) {
      if (!ring.is_zero(v)) entries.emplace(std::make_pair(i, j), v);
    } else {
      it->second = ring.add(it->second, v);
      if (ring.is_zero(it->second)) entries.erase(it);
    }
  }
  Scalar get(const Ring& ring, int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? ring.zero() : it->second;
  }
  bool is_zero() const { return entries.empty(); }

  ExactMatrix transposed() const {
    ExactMatrix t(cols, rows);
    for (const auto& [ij, v] : entries) t.entries[{ij.second, ij.first}] = v;
    return t;
  }

  static ExactMatrix identity(const Ring& ring, int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.entries[{i, i}] = ring.one();
    return m;
  }

  // columns as sparse vectors, for composition checks
  std::vector<std::map<int, Scalar>> columns() const {
    std::vector<std::map<int, Scalar>> cs(cols);
    for (const auto& [ij, v] : entries) cs[ij.second][ij.first] = v;
    return cs;
  }
};

template <class Ring>
ExactMatrix<Ring> matmul(const Ring& ring, const ExactMatrix<Ring>& a, const ExactMatrix<Ring>& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::ShapeMismatch, "matmul dimensions");
  ExactMatrix<Ring> out(a.rows, b.cols);
  auto arows = std::map<int, std::map<int, typename Ring::Elem>>{};
  for (const auto& [ij, v] : a.entries) arows[ij.first][ij.second] = v;
  auto bcols = b.columns();
  for (const auto& [i, row] : arows)
    for (int j = 0; j < b.cols; ++j) {
      auto s = ring.zero();
      const auto& col = bcols[j];
      for (const auto& [k, va] : row) {
        auto it = col.find(k);
        if (it != col.end()) s = ring.add(s, ring.mul(va, it->second));
      }
      if (!ring.is_zero(s)) out.entries[{i, j}] = std::move(s);
    }
  return out;
}

// Rank by Gaussian elimination over a field, sparse rows, pivot row chosen
// with fewest nonzeros.
template <class Ring>
int rank(const Ring& ring, const ExactMatrix<Ring>& m) {
  static_assert(Ring::is_field, "rank requires a field (Q or GF(p))");
  std::vector<std::map<int, typename Ring::Elem>> rows;
  {
    std::map<int, std::map<int, typename Ring::Elem>> tmp;
    for (const auto& [ij, v] : m.entries) tmp[ij.first][ij.second] = v;
    for (auto& [i, r] : tmp) rows.push_back(std::move(r));
  }
  int rk = 0;
  for (int col = 0; col < m.cols && !rows.empty(); ++col) {
    int best = -1;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].count(col) && (best < 0 || rows[i].size() < rows[best].size()))
        best = static_cast<int>(i);
    if (best < 0) continue;
    auto pivot_row = std::move(rows[best]);
    rows.erase(rows.begin() + best);
    auto inv = ring.inv(pivot_row[col]);
    for (auto& [j, v] : pivot_row) v = ring.mul(v, inv);
    for (auto& r : rows) {
      auto it = r.find(col);
      if (it == r.end()) continue;
      auto c = ring.neg(it->second);
      for (const auto& [j, v] : pivot_row) {
        auto jt = r.find(j);
        if (jt == r.end()) {
          auto w = ring.mul(c, v);
          if (!ring.is_zero(w)) r.emplace(j, std::move(w));
        } else {
          jt->second = ring.add(jt->second, ring.mul(c, v));
          if (ring.is_zero(jt->second)) r.erase(jt);
        }
      }
    }
    std::erase_if(rows, [](const auto& r) { return r.empty(); });
    ++rk;
  }
  return rk;
}

// Elementary divisors d1 | d2 | ... of an integer matrix; only the nonzero
// diagonal entries are reported, so the list length equals the rank.
// Pivoting always selects a smallest-magnitude nonzero entry, which keeps the
// intermediate growth in check; entries are arbitrary-precision regardless.
inline std::vector<mpz_class> smith_normal_form(const ExactMatrix<ZRing>& m) {
  const int R = m.rows, C = m.cols;
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C, 0));
  for (const auto& [ij, v] : m.entries) a[ij.first][ij.second] = v;

  const int steps = std::min(R, C);
  std::vector<mpz_class> diag;
  for (int s = 0; s < steps; ++s) {
    // locate smallest-magnitude nonzero in the trailing submatrix
    int pi = -1, pj = -1;
    mpz_class best;
    for (int i = s; i < R; ++i)
      for (int j = s; j < C; ++j) {
        if (a[i][j] == 0) continue;
        mpz_class mag = abs(a[i][j]);
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(a[s], a[pi]);
    for (int i = s; i < R; ++i) std::swap(a[i][s], a[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = s + 1; i < R; ++i) {
        if (a[i][s] == 0) continue;
        mpz_class q = a[i][s] / a[s][s];
        if (q != 0)
          for (int j = s; j < C; ++j) a[i][j] -= q * a[s][j];
        if (a[i][s] != 0) {
          // remainder smaller in magnitude than the pivot: swap up and redo
          std::swap(a[s], a[i]);
          clean = false;
        }
      }
      for (int j = s + 1; j < C; ++j) {
        if (a[s][j] == 0) continue;
        mpz_class q = a[s][j] / a[s][s];
        if (q != 0)
          for (int i = s; i < R; ++i) a[i][j] -= q * a[i][s];
        if (a[s][j] != 0) {
          for (int i = s; i < R; ++i) std::swap(a[i][s], a[i][j]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(a[s][s]));
  }

  // enforce the divisibility chain
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        if (diag[j] % diag[i] == 0) continue;
        mpz_class g, l;
        mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
        l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
        changed = true;
      }
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

// Per degree: free rank plus torsion coefficients (elementary divisors > 1);
// over a field the torsion list is empty and free_rank is the dimension.
struct DegreeHomology {
  int degree = 0;
  long free_rank = 0;
  std::vector<mpz_class> torsion;
};

struct HomologyResult {
  std::vector<DegreeHomology> degrees;
  const DegreeHomology& at(int n) const { return degrees.at(static_cast<std::size_t>(n)); }
};

// Homology of a finite chain complex given dims C_0..C_D and the boundary
// maps boundaries[k] = d_{k+1} : C_{k+1} -> C_k; d_{D+1} is taken to be zero.
// H_k = ker d_k / im d_{k+1} with free rank dim C_k - rank d_k - rank d_{k+1};
// over Z the torsion of H_k is the set of elementary divisors of d_{k+1}
// exceeding 1 (the kernel is a pure sublattice, so the cokernel splits).
template <class Ring>
HomologyResult homology(const Ring& ring, const std::vector<long>& dims,
                        const std::vector<ExactMatrix<Ring>>& boundaries) {
  static_assert(Ring::is_field || std::is_same_v<Ring, ZRing>,
                "homology requires a field or Z");
  const int D = static_cast<int>(dims.size()) - 1;
  if (static_cast<int>(boundaries.size()) != D)
    throw Error(ErrorCode::ShapeMismatch, "need one boundary map per positive degree");
  for (int k = 0; k < D; ++k) {
    if (boundaries[k].rows != dims[k] || boundaries[k].cols != dims[k + 1])
      throw Error(ErrorCode::ShapeMismatch, "boundary map shape mismatch at degree " +
                                                std::to_string(k + 1));
    if (k + 1 < D && !matmul(ring, boundaries[k], boundaries[k + 1]).is_zero())
      throw Error(ErrorCode::NotAComplex,
                  "d_" + std::to_string(k + 1) + " o d_" + std::to_string(k + 2) + " != 0");
  }

  std::vector<long> rk(D + 2, 0);
  std::vector<std::vector<mpz_class>> divisors(D + 2);
  for (int k = 1; k <= D; ++k) {
    if constexpr (std::is_same_v<Ring, ZRing>) {
      divisors[k] = smith_normal_form(boundaries[k - 1]);
      rk[k] = static_cast<long>(divisors[k].size());
    } else {
      rk[k] = rank(ring, boundaries[k - 1]);
    }
  }

  HomologyResult res;
  for (int k = 0; k <= D; ++k) {
    DegreeHomology h;
    h.degree = k;
    h.free_rank = dims[k] - rk[k] - rk[k + 1];
    if constexpr (std::is_same_v<Ring, ZRing>) {
      for (const auto& d : divisors[k + 1])
        if (d > 1) h.torsion.push_back(d);
    }
    res.degrees.push_back(std::move(h));
  }
  return res;
}

// Basis of the null space of a matrix over a field. Each basis vector has
// value 1 at its own free column and support otherwise only on pivot columns,
// so coefficients of a kernel element in this basis can be read off the free
// columns directly.
template <class Ring>
struct KernelBasis {
  std::vector<SparseVec<Ring>> vectors;
  std::vector<std::int64_t> free_columns;  // one per basis vector
};

template <class Ring>
KernelBasis<Ring> kernel_basis_with_free(const Ring& ring, const ExactMatrix<Ring>& m) {
  static_assert(Ring::is_field);
  EchelonSpan<Ring> rowspace(ring);
  std::vector<std::map<int, typename Ring::Elem>> rows(m.rows);
  for (const auto& [ij, v] : m.entries) rows[ij.first][ij.second] = v;
  for (const auto& r : rows) {
    SparseVec<Ring> v;
    for (const auto& [j, c] : r) v[j] = c;
    rowspace.insert(v);
  }
  KernelBasis<Ring> out;
  for (int j = 0; j < m.cols; ++j) {
    if (rowspace.is_pivot(j)) continue;
    SparseVec<Ring> v;
    v[j] = ring.one();
    for (const auto& [p, row] : rowspace.rows()) {
      auto it = row.find(j);
      if (it != row.end()) v[p] = ring.neg(it->second);
    }
    out.vectors.push_back(std::move(v));
    out.free_columns.push_back(j);
  }
  return out;
}

template <class Ring>
std::vector<SparseVec<Ring>> kernel_basis(const Ring& ring, const ExactMatrix<Ring>& m) {
  return kernel_basis_with_free(ring, m).vectors;
}

// Basis of the column space, as an echelonized span.
template <class Ring>
EchelonSpan<Ring> image_span(const Ring& ring, const ExactMatrix<Ring>& m) {
  static_assert(Ring::is_field);
  EchelonSpan<Ring> span(ring);
  for (const auto& col : m.columns()) {
    SparseVec<Ring> v;
    for (const auto& [i, c] : col) v[i] = c;
    span.insert(std::move(v));
  }
  return span;
}

// MatrixMarket coordinate text format, for debugging dumps.
template <class Ring>
void write_matrix_market(const Ring& ring, const ExactMatrix<Ring>& m, std::ostream& os) {
  os << "%%MatrixMarket matrix coordinate real general\n";
  os << m.rows << " " << m.cols << " " << m.entries.size() << "\n";
  for (const auto& [ij, v] : m.entries)
    os << (ij.first + 1) << " " << (ij.second + 1) << " " << ring.to_string(v) << "\n";
}

}  // namespace ybx
