#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "chevpoly/rational.hpp"

namespace chevpoly {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Gaussian elimination with partial structure; returns rank. The matrix is
// reduced in place to row echelon form.
inline std::size_t row_echelon(RatMat& m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size(), rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank_of(RatMat m) { return row_echelon(m); }

inline Rat det(RatMat m) {
  std::size_t n = m.size();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return d;
}

// Fraction-free determinant of an integer matrix (Bareiss).
inline Int int_det(IntMat m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      for (std::size_t j = c + 1; j < n; ++j) {
        m[r][j] = (m[c][c] * m[r][j] - m[r][c] * m[c][j]) / prev;
      }
      m[r][c] = 0;
    }
    prev = m[c][c];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Solves A x = b for square nonsingular A; returns nullopt when singular or
// inconsistent is impossible here (square path).
inline std::optional<RatVec> solve(RatMat a, RatVec b) {
  std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Basis of the rational nullspace {x : A x = 0}, cleared to primitive
// integer vectors.
inline IntMat nullspace_int(RatMat a, std::size_t cols) {
  std::size_t rank = row_echelon(a);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  {
    std::size_t c = 0;
    for (std::size_t r = 0; r < rank; ++r) {
      while (c < cols && a[r][c] == 0) ++c;
      pivot_col.push_back(c);
      is_pivot[c] = true;
    }
  }
  IntMat basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    RatVec x(cols, Rat(0));
    x[fc] = 1;
    for (std::size_t r = rank; r-- > 0;) {
      Rat s = 0;
      for (std::size_t j = pivot_col[r] + 1; j < cols; ++j) s += a[r][j] * x[j];
      x[pivot_col[r]] = -s / a[r][pivot_col[r]];
    }
    Int l = lcm_of_denominators(x);
    IntVec xi(cols);
    for (std::size_t j = 0; j < cols; ++j) xi[j] = to_int(x[j] * l);
    make_primitive(xi);
    basis.push_back(std::move(xi));
  }
  return basis;
}

// Basis of the integer kernel {x in Z^m : A x = 0} for integer A, via
// unimodular column reduction of A alongside an identity transform.
inline IntMat integer_kernel(IntMat a, std::size_t cols) {
  std::size_t rows = a.size();
  IntMat u(cols, IntVec(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  // column j of the pair (a,u) is (a[*][j], u[*][j])
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    // clear row r to a single nonzero among columns >= lead via gcd steps
    while (true) {
      std::size_t nz = cols;
      for (std::size_t j = lead; j < cols; ++j)
        if (a[r][j] != 0) {
          nz = j;
          break;
        }
      if (nz == cols) break;
      // move it to position lead
      if (nz != lead)
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][nz], a[i][lead]);
      if (nz != lead)
        for (std::size_t i = 0; i < cols; ++i) std::swap(u[i][nz], u[i][lead]);
      bool more = false;
      for (std::size_t j = lead + 1; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        Int q = a[r][j] / a[r][lead];
        for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][lead];
        for (std::size_t i = 0; i < cols; ++i) u[i][j] -= q * u[i][lead];
        if (a[r][j] != 0) more = true;
      }
      if (!more) break;
      // smallest remainder becomes the new pivot; loop again
      std::size_t best = lead;
      for (std::size_t j = lead; j < cols; ++j)
        if (a[r][j] != 0 && (a[r][best] == 0 || abs(a[r][j]) < abs(a[r][best]))) best = j;
      if (best != lead) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][best], a[i][lead]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(u[i][best], u[i][lead]);
      }
    }
    if (a[r][lead] != 0) ++lead;
  }
  IntMat kernel;
  for (std::size_t j = lead; j < cols; ++j) {
    IntVec col(cols);
    for (std::size_t i = 0; i < cols; ++i) col[i] = u[i][j];
    kernel.push_back(std::move(col));
  }
  return kernel;
}

}  // namespace chevpoly
