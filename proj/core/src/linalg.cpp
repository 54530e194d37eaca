#include "klk/linalg.hpp"

#include "klk/errors.hpp"

namespace klk {

RMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return RMatrix(rows, std::vector<Rational>(cols, Rational(0)));
}

RMatrix identity_matrix(std::size_t n) {
  RMatrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<std::size_t> rref(RMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RMatrix m) { return rref(m).size(); }

Rational determinant(RMatrix m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

RMatrix inverse(const RMatrix& m) {
  std::size_t n = m.size();
  RMatrix aug = zero_matrix(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionError("inverse of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw ConsistencyError("singular matrix");
  RMatrix inv = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

RMatrix multiply(const RMatrix& a, const RMatrix& b) {
  if (a.empty()) return {};
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RMatrix r = zero_matrix(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

bool RowSpace::insert(std::vector<Rational> v) {
  if (v.size() != dim_) throw DimensionError("row length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& f = v[pivots_[i]];
    if (f == 0) continue;
    Rational coef = f;
    for (std::size_t j = 0; j < dim_; ++j)
      if (rows_[i][j] != 0) v[j] -= coef * rows_[i][j];
  }
  std::size_t p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return false;
  Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  // keep earlier rows reduced against the new pivot
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    Rational f = row[p];
    for (std::size_t j = 0; j < dim_; ++j)
      if (v[j] != 0) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

SMatrix inverse(const SMatrix& m) {
  std::size_t n = m.size();
  SMatrix a = m;
  SMatrix inv(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw DimensionError("inverse of non-square matrix");
    inv[i][i] = Scalar(1L);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) throw ConsistencyError("singular scalar matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Scalar p = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[c][j].is_zero()) a[c][j] /= p;
      if (!inv[c][j].is_zero()) inv[c][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
        if (!inv[c][j].is_zero()) inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

SMatrix multiply(const SMatrix& a, const SMatrix& b) {
  if (a.empty()) return {};
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  SMatrix r(n, std::vector<Scalar>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

}  // namespace klk
