#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace hullwalk {

// Dense row-major matrix. Dimensions here are tiny (d <= 6), so everything is
// plain Gaussian elimination with partial pivoting.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

inline double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

// determinant via LU with partial pivoting; destroys a local copy
inline double det(Matrix m) {
  assert(m.rows == m.cols);
  const int n = m.rows;
  double d = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(m(i, k)) > std::fabs(m(piv, k))) piv = i;
    if (m(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      d = -d;
    }
    d *= m(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double f = m(i, k) / m(k, k);
      for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

// Cholesky factor L (lower) of a symmetric positive-definite matrix.
// Throws std::invalid_argument if the matrix is not SPD.
inline Matrix cholesky(const Matrix& s) {
  if (s.rows != s.cols) throw std::invalid_argument("cholesky: matrix not square");
  const int n = s.rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (std::fabs(s(i, j) - s(j, i)) > 1e-12 * (1.0 + std::fabs(s(i, j))))
        throw std::invalid_argument("cholesky: matrix not symmetric");
  Matrix l(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = s(i, j);
      for (int k = 0; k < j; ++k) sum -= l(i, k) * l(j, k);
      if (i == j) {
        if (sum <= 0.0) throw std::invalid_argument("cholesky: matrix not positive definite");
        l(i, i) = std::sqrt(sum);
      } else {
        l(i, j) = sum / l(j, j);
      }
    }
  }
  return l;
}

// Generalized cross product: the vector orthogonal to the d-1 rows of `rows`
// (each of length d), with components given by signed cofactors.
inline std::vector<double> orthogonal_complement(const std::vector<std::vector<double>>& rows, int d) {
  assert(static_cast<int>(rows.size()) == d - 1);
  std::vector<double> nrm(d);
  Matrix minor(d - 1, d - 1);
  for (int j = 0; j < d; ++j) {
    for (int r = 0; r < d - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < d; ++c) {
        if (c == j) continue;
        minor(r, cc++) = rows[r][c];
      }
    }
    nrm[j] = ((j % 2) == 0 ? 1.0 : -1.0) * ((d - 1) > 0 ? det(minor) : 1.0);
  }
  return nrm;
}

// sqrt(det(G)) where G is the Gram matrix of the given vectors
inline double gram_volume(const std::vector<std::vector<double>>& vecs) {
  const int m = static_cast<int>(vecs.size());
  Matrix g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = dot(vecs[i], vecs[j]);
  const double dg = det(g);
  return dg > 0.0 ? std::sqrt(dg) : 0.0;
}

}  // namespace hullwalk
