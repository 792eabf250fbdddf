#include "hullwalk/simplex.hpp"

#include <cmath>
#include <cstddef>

namespace hullwalk {

bool feasible_nonneg(const Matrix& A, std::vector<double> b, double tol) {
  const int m = A.rows;
  const int n = A.cols;
  const int ncols = n + m + 1;  // original | artificial | rhs
  std::vector<double> t(static_cast<std::size_t>(m) * ncols, 0.0);
  auto T = [&](int r, int c) -> double& { return t[static_cast<std::size_t>(r) * ncols + c]; };

  double bscale = 1.0;
  for (int i = 0; i < m; ++i) bscale = std::max(bscale, std::fabs(b[i]));

  for (int i = 0; i < m; ++i) {
    const double sign = (b[i] < 0.0) ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) T(i, j) = sign * A(i, j);
    T(i, n + i) = 1.0;
    T(i, ncols - 1) = sign * b[i];
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // reduced costs for min sum(artificials): z_j = c_j - sum_i T_ij (c_B = 1)
  std::vector<double> z(ncols, 0.0);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += T(i, j);
    z[j] = -s;
  }
  double obj = 0.0;
  for (int i = 0; i < m; ++i) obj += T(i, ncols - 1);

  const double eps = 1e-11 * bscale;
  const int max_iters = 200 * (n + m);
  for (int iter = 0; iter < max_iters; ++iter) {
    // Bland's rule: smallest-index column with negative reduced cost
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (z[j] < -eps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (T(i, enter) > eps) {
        const double ratio = T(i, ncols - 1) / T(i, enter);
        if (leave < 0 || ratio < best_ratio - eps ||
            (ratio < best_ratio + eps && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) break;  // unbounded; cannot happen for phase 1 but bail out safely

    const double piv = T(leave, enter);
    for (int j = 0; j < ncols; ++j) T(leave, j) /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = T(i, enter);
      if (f == 0.0) continue;
      for (int j = 0; j < ncols; ++j) T(i, j) -= f * T(leave, j);
    }
    const double zf = z[enter];
    for (int j = 0; j < ncols; ++j) z[j] -= zf * T(leave, j);
    basis[leave] = enter;

    obj = 0.0;
    for (int i = 0; i < m; ++i)
      if (basis[i] >= n) obj += T(i, ncols - 1);
    if (obj <= tol * bscale) return true;
  }

  obj = 0.0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n) obj += T(i, ncols - 1);
  return obj <= tol * bscale;
}

bool origin_in_convex_hull(const double* points, int npts, int d, double tol) {
  // 0 = sum lambda_k p_k, sum lambda_k = 1, lambda >= 0
  Matrix A(d + 1, npts);
  for (int k = 0; k < npts; ++k) {
    for (int i = 0; i < d; ++i) A(i, k) = points[static_cast<std::size_t>(k) * d + i];
    A(d, k) = 1.0;
  }
  std::vector<double> b(d + 1, 0.0);
  b[d] = 1.0;
  return feasible_nonneg(A, std::move(b), tol);
}

bool in_conic_hull(const double* points, int npts, int d, const double* u, double tol) {
  Matrix A(d, npts);
  for (int k = 0; k < npts; ++k)
    for (int i = 0; i < d; ++i) A(i, k) = points[static_cast<std::size_t>(k) * d + i];
  std::vector<double> b(u, u + d);
  return feasible_nonneg(A, std::move(b), tol);
}

}  // namespace hullwalk
