// Small exact linear algebra over the rationals (systems here are at most
// rank 8, so Gaussian elimination with exact arithmetic is plenty).
#pragma once

#include "lie/rational.hpp"

#include <optional>
#include <vector>

namespace lie {

using RatMat = std::vector<RatVec>;  // row-major

inline RatMat identity_mat(int n) {
  RatMat m(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat out(n, RatVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == Rat(0)) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

inline RatMat transpose(const RatMat& a) {
  if (a.empty()) return a;
  RatMat out(a[0].size(), RatVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

// Solves A x = b exactly; returns a particular solution or nullopt when the
// system is inconsistent.  A need not be square or full rank.
inline std::optional<RatVec> solve_linear(RatMat a, RatVec b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivot_col(rows, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != Rat(0)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rat inv = Rat(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == Rat(0)) continue;
      const Rat f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col[r] = c;
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (b[i] != Rat(0)) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

// Exact inverse of a square matrix; throws if singular.
inline RatMat mat_inverse(RatMat a) {
  const int n = static_cast<int>(a.size());
  RatMat inv = identity_mat(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != Rat(0)) {
        p = i;
        break;
      }
    if (p < 0) throw std::domain_error("mat_inverse: singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rat d = Rat(1) / a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] *= d;
      inv[c][j] *= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == Rat(0)) continue;
      const Rat f = a[i][c];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// Rank of a matrix (exact).
inline int mat_rank(RatMat a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != Rat(0)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == Rat(0)) continue;
      const Rat f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace lie
