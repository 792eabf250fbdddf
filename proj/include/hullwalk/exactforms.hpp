#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hullwalk::exactforms {

// Rational mode is available for small n where the formula is a finite sum of
// rationals; the float value is always computed in log space / compensated sums.
struct ExactValue {
  double value = 0.0;
  std::optional<std::string> rational;  // "p/q"
};

inline constexpr int kRationalLimit = 64;

// log((2n-1)!!/(2n)!!) = lgamma(n+1/2) - lgamma(1/2) - lgamma(n+1)
double log_dfac_ratio(std::int64_t n);
double dfac_ratio(std::int64_t n);

ExactValue sparre_andersen(std::int64_t n);  // n = 0 returns 1 (empty conjunction)
ExactValue theorem1_prob(std::int64_t n);
ExactValue bridge_prob(std::int64_t n);
ExactValue wendel_prob(std::int64_t n, int d);
ExactValue face_prob_pinned(int n, const std::vector<int>& indices);
ExactValue face_prob_bridge(int n, const std::vector<int>& indices);
ExactValue face_prob_temporal_sum(int n, const std::vector<int>& gaps);
ExactValue expected_faces(std::int64_t n, int d);
ExactValue expected_faces_at_origin(std::int64_t n, int d);
ExactValue spitzer_widom_perimeter(std::int64_t n);  // gaussian(I_2)
ExactValue gaussian_expected_volume(std::int64_t n, int d);
ExactValue orthoscheme_intrinsic_volume(std::int64_t n, int k);
ExactValue spherical_U(std::int64_t n, int k);

// E V_1(C_n) for gaussian(I_d): sum_j E||S_j||/j with E||S_j|| = sqrt(j) E||N_d||
ExactValue gaussian_v1(std::int64_t n, int d);
double gaussian_norm_mean(int d);  // E||N_d|| = sqrt(2) Gamma((d+1)/2)/Gamma(d/2)

double ball_volume(int k);  // kappa_k

enum class FormulaId {
  log_asympt,       // log n / sqrt(pi n)
  gamma_asympt,     // 1 / sqrt(pi n)
  e_rw_0,           // 2 (log n)^{d-1} / sqrt(pi n)
  e_br_0,           // 2 d (log n)^{d-1} / n
  e_rw,             // 2 (log n)^{d-1}
  theorem2,         // sqrt(2) r_avg log n / sqrt(pi n)
  exit_halfspace,   // sqrt(2/pi) r
};

struct AsymptoticParams {
  int d = 2;
  double r = 0.0;  // R(u) or E R(Sigma^{-1/2} U), supplied by module spitzer
};

struct AsymptoticValue {
  double value = 0.0;
  FormulaId formula_id;
};

AsymptoticValue asymptotic(FormulaId id, std::int64_t n, const AsymptoticParams& params = {});
std::optional<FormulaId> parse_formula_id(const std::string& name);

}  // namespace hullwalk::exactforms
