#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Small exact linear algebra over mpq_class. Everything in this project is
// rank <= 16, so dense Gauss elimination is all we ever need.

namespace wlat {

using Int = long;
using IVec = std::vector<Int>;
using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

inline QMat qmat(std::size_t rows, std::size_t cols) {
  return QMat(rows, QVec(cols, mpq_class(0)));
}

inline QMat qidentity(std::size_t n) {
  QMat m = qmat(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QVec to_qvec(const IVec& v) {
  QVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = mpq_class((long)v[i]);
  return q;
}

inline QVec qmatvec(const QMat& m, const QVec& v) {
  QVec out(m.size(), mpq_class(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

// Inverse by Gauss-Jordan; the matrices we invert (Cartan matrices) are
// always nonsingular, so failure is a logic error.
inline QMat qinverse(const QMat& a0) {
  std::size_t n = a0.size();
  QMat a = a0;
  QMat inv = qidentity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::string("qinverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    mpq_class d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Solve M x = rhs for an m x n system with full column rank n (m >= n).
// Returns the unique solution if the system is consistent, otherwise nullopt.
inline std::optional<QVec> solve_full_column_rank(const QMat& m, const QVec& rhs) {
  std::size_t rows = m.size();
  if (rows == 0) return QVec{};
  std::size_t cols = m[0].size();
  QMat a = qmat(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    a[i][cols] = rhs[i];
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    mpq_class d = a[rank][col];
    for (std::size_t j = col; j <= cols; ++j) a[rank][j] /= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (std::size_t j = col; j <= cols; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < cols) throw std::string("solve_full_column_rank: rank-deficient system");
  for (std::size_t i = rank; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  QVec x(cols, mpq_class(0));
  for (std::size_t k = 0; k < rank; ++k) x[pivot_col[k]] = a[k][cols];
  return x;
}

inline bool is_integral(const mpq_class& q) { return q.get_den() == 1; }

inline std::optional<IVec> as_int_vec(const QVec& q) {
  IVec out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!is_integral(q[i])) return std::nullopt;
    if (!q[i].get_num().fits_slong_p()) return std::nullopt;
    out[i] = q[i].get_num().get_si();
  }
  return out;
}

inline IVec ivec_add(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline IVec ivec_scale(Int s, const IVec& a) {
  IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

inline bool ivec_nonneg(const IVec& a) {
  for (Int x : a)
    if (x < 0) return false;
  return true;
}

inline bool ivec_zero(const IVec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

inline Int ivec_sum(const IVec& a) {
  Int s = 0;
  for (Int x : a) s += x;
  return s;
}

}  // namespace wlat
