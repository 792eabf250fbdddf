#include "hullwalk/rational_forms.hpp"

#include <stdexcept>

namespace hullwalk::rational {

using Int = boost::multiprecision::cpp_int;

Rat dfac_ratio(int n) {
  if (n < 0) throw std::invalid_argument("dfac_ratio: negative n");
  Int num = 1, den = 1;
  for (int k = 1; k <= n; ++k) {
    num *= 2 * k - 1;
    den *= 2 * k;
  }
  return Rat(num, den);
}

Rat theorem1_prob(int n) {
  if (n < 1) throw std::invalid_argument("theorem1_prob: n must be >= 1");
  Rat s = 0;
  for (int k = 1; k <= n; ++k) s += dfac_ratio(n - k) / k;
  return s;
}

Rat bridge_prob(int n) {
  if (n < 1) throw std::invalid_argument("bridge_prob: n must be >= 1");
  Rat s = 0;
  for (int k = 1; k <= n; ++k) s += Rat(1, Int(k) * (n - k + 1));
  return s;
}

Rat wendel_prob(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("wendel_prob: n, d must be >= 1");
  Int binom = 1, sum = 0;
  for (int k = 0; k <= d - 1 && k <= n - 1; ++k) {
    sum += binom;
    binom = binom * (n - 1 - k) / (k + 1);
  }
  Int pow2 = Int(1) << (n - 1);
  return Rat(sum, pow2);
}

Rat face_prob_pinned(int n, const std::vector<int>& indices) {
  const int d = static_cast<int>(indices.size());
  if (d < 1) throw std::invalid_argument("face_prob_pinned: empty indices");
  for (int k = 0; k < d; ++k)
    if (indices[k] < 0 || indices[k] > n || (k > 0 && indices[k] <= indices[k - 1]))
      throw std::invalid_argument("face_prob_pinned: indices must satisfy 0 <= i_1 < ... < i_d <= n");
  Rat r = 2 * dfac_ratio(indices.front()) * dfac_ratio(n - indices.back());
  for (int k = 1; k < d; ++k) r /= indices[k] - indices[k - 1];
  return r;
}

Rat face_prob_bridge(int n, const std::vector<int>& indices) {
  const int d = static_cast<int>(indices.size());
  if (d < 1) throw std::invalid_argument("face_prob_bridge: empty indices");
  for (int k = 0; k < d; ++k)
    if (indices[k] < 0 || indices[k] > n || (k > 0 && indices[k] <= indices[k - 1]))
      throw std::invalid_argument("face_prob_bridge: indices must satisfy 0 <= i_1 < ... < i_d <= n");
  Int den = n - indices.back() + indices.front() + 1;
  for (int k = 1; k < d; ++k) den *= indices[k] - indices[k - 1];
  return Rat(2, den);
}

namespace {

Rat faces_sum(int remaining_budget, int m) {
  // sum over j_1 + ... + j_m <= remaining_budget of prod 1/j_i
  if (m == 0) return 1;
  Rat s = 0;
  for (int j = 1; j <= remaining_budget - (m - 1); ++j) s += faces_sum(remaining_budget - j, m - 1) / j;
  return s;
}

Rat origin_faces_sum(int n, int d, int prev, int depth) {
  // sum over prev < i_{depth} < ... < i_d <= n
  if (depth > d) return dfac_ratio(n - prev);
  Rat s = 0;
  for (int i = prev + 1; i <= n - (d - depth); ++i) {
    Rat term = origin_faces_sum(n, d, i, depth + 1);
    s += term / (depth == 2 ? i : i - prev);
  }
  return s;
}

}  // namespace

Rat expected_faces(int n, int d) {
  if (n < d || d < 2) throw std::invalid_argument("expected_faces: need n >= d >= 2");
  return 2 * faces_sum(n, d - 1);
}

Rat expected_faces_at_origin(int n, int d) {
  if (d < 1) throw std::invalid_argument("expected_faces_at_origin: d must be >= 1");
  if (d == 1) return n >= 1 ? 2 * dfac_ratio(n) : Rat(0);
  if (n < d - 1) return 0;  // no admissible index tuple
  return 2 * origin_faces_sum(n, d, 0, 2);
}

Rat spherical_U(int n, int k) {
  if (n < 1) throw std::invalid_argument("spherical_U: n must be >= 1");
  if (k == 1) return Rat(1, 2) - dfac_ratio(n);
  if (k == 2) return Rat(1, 2) - theorem1_prob(n) / 2;
  throw std::invalid_argument("spherical_U: only k = 1, 2 have closed forms");
}

}  // namespace hullwalk::rational
