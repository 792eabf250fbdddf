#pragma once

#include <vector>

#include "hullwalk/linalg.hpp"

namespace hullwalk {

// Phase-1 dense simplex for the feasibility question:
//   does there exist lambda >= 0 with A lambda = b ?
// A is m x n with m small (<= d+1) and n moderate. Minimizes the sum of
// artificial variables with Bland's rule; feasible iff the optimum is ~0.
bool feasible_nonneg(const Matrix& A, std::vector<double> b, double tol = 1e-9);

// 0 in conv(points)? points given as a flat row-major array, npts x d.
bool origin_in_convex_hull(const double* points, int npts, int d, double tol = 1e-9);

// u in cone(points) = { sum lambda_k p_k : lambda >= 0 }?
bool in_conic_hull(const double* points, int npts, int d, const double* u, double tol = 1e-9);

}  // namespace hullwalk
