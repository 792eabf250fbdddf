#include "hullwalk/comboracle.hpp"

#include <cmath>
#include <stdexcept>

namespace hullwalk::comboracle {

namespace {

// signed value of det[x_2-x_1, ..., x_d-x_1, z-x_1] as a linear functional of z
struct OrientedPlane {
  std::vector<double> coef;
  std::vector<double> anchor;
  double sign = 1.0;

  double value(std::span<const double> z) const {
    double s = 0.0;
    for (std::size_t i = 0; i < coef.size(); ++i) s += coef[i] * (z[i] - anchor[i]);
    return sign * s;
  }
};

OrientedPlane oriented_plane(const std::vector<std::vector<double>>& defining, int d) {
  // defining holds the d points x_1 ... x_d
  std::vector<std::vector<double>> rows(d - 1, std::vector<double>(d));
  for (int r = 1; r < d; ++r)
    for (int c = 0; c < d; ++c) rows[r - 1][c] = defining[r][c] - defining[0][c];
  OrientedPlane p;
  p.coef = orthogonal_complement(rows, d);
  if (norm(p.coef) == 0.0)
    throw DegenerateGeometryError("comboracle: defining points do not span a hyperplane");
  p.anchor = defining[0];
  // cofactor expansion along the last row carries the parity (-1)^{d-1}
  p.sign = (d % 2 == 1) ? 1.0 : -1.0;
  return p;
}

// census over products of cyclic shifts within consecutive index blocks
FractionCensus block_cycle_census(const std::vector<std::vector<double>>& increments, int d,
                                  const std::vector<int>& boundaries,  // 0 = b_0 < ... < b_m = total
                                  int check_upto,                      // test S_1..S_check_upto
                                  const OrientedPlane& plane, double tol_abs) {
  const int nblocks = static_cast<int>(boundaries.size()) - 1;
  std::vector<int> len(nblocks), shift(nblocks, 0);
  long long family = 1;
  for (int j = 0; j < nblocks; ++j) {
    len[j] = boundaries[j + 1] - boundaries[j];
    family *= len[j];
  }

  FractionCensus census;
  census.family_size = family;
  const int total = boundaries.back();
  std::vector<double> sum(increments[0].size());
  std::vector<int> order(total);
  for (long long combo = 0; combo < family; ++combo) {
    long long rem = combo;
    for (int j = 0; j < nblocks; ++j) {
      shift[j] = static_cast<int>(rem % len[j]);
      rem /= len[j];
    }
    int pos = 0;
    for (int j = 0; j < nblocks; ++j)
      for (int t = 0; t < len[j]; ++t) order[pos++] = boundaries[j] + (t + shift[j]) % len[j];

    std::fill(sum.begin(), sum.end(), 0.0);
    bool ok_plus = true, ok_minus = true;
    for (int k = 0; k < total && (ok_plus || ok_minus); ++k) {
      const auto& x = increments[order[k]];
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += x[i];
      if (k + 1 > check_upto) continue;
      const double v = plane.value(sum);
      if (v < -tol_abs) ok_plus = false;
      if (v > tol_abs) ok_minus = false;
    }
    if (ok_plus) ++census.hits_plus;
    if (ok_minus) ++census.hits_minus;
  }
  return census;
}

double path_scale(const WalkPath& path) {
  double s = 1.0;
  for (int k = 0; k <= path.n; ++k) s = std::max(s, norm(path.at(k)));
  return s;
}

std::vector<std::vector<double>> path_increments(const WalkPath& path) {
  std::vector<std::vector<double>> incr(path.n, std::vector<double>(path.d));
  for (int k = 1; k <= path.n; ++k)
    for (int i = 0; i < path.d; ++i) incr[k - 1][i] = path.point(k)[i] - path.point(k - 1)[i];
  return incr;
}

}  // namespace

bool shift_stays_inside(const PointSequence& seq, const HalfSpace& h, int shift, double tol) {
  const int n = static_cast<int>(seq.steps.size());
  const int d = static_cast<int>(seq.base.size());
  std::vector<double> p = seq.base;
  if (!h.contains(p, tol)) return false;
  for (int t = 0; t < n; ++t) {
    const auto& x = seq.steps[(shift + t) % n];
    for (int i = 0; i < d; ++i) p[i] += x[i];
    if (!h.contains(p, tol)) return false;
  }
  return true;
}

int cycle_lemma_witness(const PointSequence& seq, const HalfSpace& h, double tol) {
  const int n = static_cast<int>(seq.steps.size());
  const int d = static_cast<int>(seq.base.size());
  if (n < 1) throw std::invalid_argument("cycle_lemma_witness: empty sequence");

  std::vector<std::vector<double>> sums(n + 1, seq.base);  // x_0 + s_i
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < d; ++i) sums[k][i] = sums[k - 1][i] + seq.steps[k - 1][i];

  double scale = 1.0;
  for (const auto& p : sums) scale = std::max(scale, norm(p));
  const double tol_abs = tol * scale;

  if (std::fabs(h.boundary_distance(sums[0])) > tol_abs ||
      std::fabs(h.boundary_distance(sums[n])) > tol_abs)
    throw DegenerateGeometryError("cycle_lemma_witness: endpoints must lie on the boundary");
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<double> p(d);
      for (int c = 0; c < d; ++c) p[c] = seq.base[c] + sums[j][c] - sums[i][c];
      if (std::fabs(h.boundary_distance(p)) <= tol_abs && !(i == 0 && j == n))
        throw DegenerateGeometryError("cycle_lemma_witness: interior difference on the boundary");
    }

  // the proof's construction: the point outside Int(H) most distant from the
  // boundary starts the rotated path
  int k = 0;
  double worst = h.boundary_distance(sums[0]);
  for (int i = 1; i < n; ++i) {
    const double dist = h.boundary_distance(sums[i]);
    if (dist <= tol_abs && dist < worst) {
      worst = dist;
      k = i;
    }
  }
  return k;
}

FractionCensus halfspace_fraction_oracle(const WalkPath& path, const std::vector<int>& indices,
                                         double tol) {
  const int d = path.d;
  const int n = path.n;
  if (static_cast<int>(indices.size()) != d - 2)
    throw std::invalid_argument("halfspace_fraction_oracle: need d-2 indices");
  std::vector<int> boundaries = {0};
  for (int i : indices) {
    if (i <= boundaries.back() || i >= n)
      throw std::invalid_argument("halfspace_fraction_oracle: indices must satisfy 0 < i_1 < ... < n");
    boundaries.push_back(i);
  }
  boundaries.push_back(n);

  std::vector<std::vector<double>> defining;
  defining.emplace_back(d, 0.0);
  for (int i : indices) defining.emplace_back(path.point(i), path.point(i) + d);
  defining.emplace_back(path.point(n), path.point(n) + d);

  const OrientedPlane plane = oriented_plane(defining, d);
  return block_cycle_census(path_increments(path), d, boundaries, n, plane, tol * path_scale(path));
}

FractionCensus bridge_fraction_oracle(const WalkPath& bridge, const std::vector<int>& indices,
                                      double tol) {
  const int d = bridge.d;
  const int total = bridge.n;  // bridge of length n+1, so total = n+1 increments
  const int n = total - 1;
  if (n < 1) throw std::invalid_argument("bridge_fraction_oracle: bridge too short");
  if (norm(bridge.at(total)) > tol * path_scale(bridge))
    throw std::invalid_argument("bridge_fraction_oracle: path does not close at zero");
  if (static_cast<int>(indices.size()) != d - 1)
    throw std::invalid_argument("bridge_fraction_oracle: need d-1 indices");
  std::vector<int> boundaries = {0};
  for (int i : indices) {
    if (i <= boundaries.back() || i > n)
      throw std::invalid_argument("bridge_fraction_oracle: indices must satisfy 0 < i_1 < ... <= n");
    boundaries.push_back(i);
  }
  boundaries.push_back(total);  // i_d = n+1

  std::vector<std::vector<double>> defining;
  defining.emplace_back(d, 0.0);
  for (int i : indices) defining.emplace_back(bridge.point(i), bridge.point(i) + d);

  const OrientedPlane plane = oriented_plane(defining, d);
  return block_cycle_census(path_increments(bridge), d, boundaries, n, plane,
                            tol * path_scale(bridge));
}

}  // namespace hullwalk::comboracle
