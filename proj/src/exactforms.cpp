#include "hullwalk/exactforms.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hullwalk/rational_forms.hpp"

namespace hullwalk::exactforms {

namespace {

constexpr double kPi = 3.14159265358979323846;

// compensated (Kahan) accumulator; sums here can have 10^6+ terms
struct Kahan {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

std::string to_string(const rational::Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// a_0 = 1, a_m = a_{m-1} (2m-1)/(2m); callable incrementally in loops
struct DfacIter {
  double a = 1.0;
  int m = 0;
  double next() {  // returns a_m then advances
    const double cur = a;
    ++m;
    a *= (2.0 * m - 1.0) / (2.0 * m);
    return cur;
  }
};

double theorem1_float(std::int64_t n) {
  // sum_{k=1}^n a_{n-k}/k, iterated as m = n-k ascending so a_m is incremental
  Kahan s;
  DfacIter it;
  for (std::int64_t m = 0; m < n; ++m) {
    const double am = it.next();
    s.add(am / static_cast<double>(n - m));
  }
  return s.sum;
}

// composition sums c_m(t) = sum_{j_1+...+j_m = t} prod 1/j_i by convolution
std::vector<double> harmonic_compositions(std::int64_t n, int m) {
  if (n > 200000) throw std::invalid_argument("composition sum: n too large for direct convolution");
  std::vector<double> cur(n + 1, 0.0), next(n + 1, 0.0);
  for (std::int64_t j = 1; j <= n; ++j) cur[j] = 1.0 / static_cast<double>(j);
  for (int level = 2; level <= m; ++level) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::int64_t t = level; t <= n; ++t) {
      Kahan s;
      for (std::int64_t j = 1; j <= t - (level - 1); ++j) s.add(cur[t - j] / static_cast<double>(j));
      next[t] = s.sum;
    }
    std::swap(cur, next);
  }
  return cur;
}

std::vector<double> sqrt_compositions(std::int64_t n, int m) {
  if (n > 200000) throw std::invalid_argument("composition sum: n too large for direct convolution");
  std::vector<double> cur(n + 1, 0.0), next(n + 1, 0.0);
  for (std::int64_t j = 1; j <= n; ++j) cur[j] = 1.0 / std::sqrt(static_cast<double>(j));
  for (int level = 2; level <= m; ++level) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::int64_t t = level; t <= n; ++t) {
      Kahan s;
      for (std::int64_t j = 1; j <= t - (level - 1); ++j)
        s.add(cur[t - j] / std::sqrt(static_cast<double>(j)));
      next[t] = s.sum;
    }
    std::swap(cur, next);
  }
  return cur;
}

// sum_{j_1+...+j_m <= n} prod 1/sqrt(j_i); O(n) for m <= 2
double sqrt_sum(std::int64_t n, int m) {
  if (m == 1) {
    Kahan s;
    for (std::int64_t j = 1; j <= n; ++j) s.add(1.0 / std::sqrt(static_cast<double>(j)));
    return s.sum;
  }
  if (m == 2) {
    std::vector<double> prefix(n + 1, 0.0);
    Kahan q;
    for (std::int64_t j = 1; j <= n; ++j) {
      q.add(1.0 / std::sqrt(static_cast<double>(j)));
      prefix[j] = q.sum;
    }
    Kahan s;
    for (std::int64_t j = 1; j <= n - 1; ++j) s.add(prefix[n - j] / std::sqrt(static_cast<double>(j)));
    return s.sum;
  }
  const auto comp = sqrt_compositions(n, m);
  Kahan s;
  for (std::int64_t t = m; t <= n; ++t) s.add(comp[t]);
  return s.sum;
}

}  // namespace

double log_dfac_ratio(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("log_dfac_ratio: negative n");
  return std::lgamma(n + 0.5) - std::lgamma(0.5) - std::lgamma(n + 1.0);
}

double dfac_ratio(std::int64_t n) { return std::exp(log_dfac_ratio(n)); }

ExactValue sparre_andersen(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("sparre_andersen: negative n");
  ExactValue v;
  v.value = dfac_ratio(n);
  if (n <= kRationalLimit) v.rational = to_string(rational::dfac_ratio(static_cast<int>(n)));
  return v;
}

ExactValue theorem1_prob(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("theorem1_prob: n must be >= 1");
  ExactValue v;
  v.value = theorem1_float(n);
  if (n <= kRationalLimit) v.rational = to_string(rational::theorem1_prob(static_cast<int>(n)));
  return v;
}

ExactValue bridge_prob(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("bridge_prob: n must be >= 1");
  Kahan s;
  for (std::int64_t k = 1; k <= n; ++k)
    s.add(1.0 / (static_cast<double>(k) * static_cast<double>(n - k + 1)));
  ExactValue v;
  v.value = s.sum;
  if (n <= kRationalLimit) v.rational = to_string(rational::bridge_prob(static_cast<int>(n)));
  return v;
}

ExactValue wendel_prob(std::int64_t n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("wendel_prob: n, d must be >= 1");
  // log-space binomials so large n cannot overflow
  Kahan s;
  for (int k = 0; k <= d - 1 && k <= n - 1; ++k) {
    const double logb = std::lgamma(static_cast<double>(n)) - std::lgamma(static_cast<double>(k + 1)) -
                        std::lgamma(static_cast<double>(n - k));
    s.add(std::exp(logb - (n - 1) * std::log(2.0)));
  }
  ExactValue v;
  v.value = std::min(1.0, s.sum);
  if (n <= kRationalLimit) v.rational = to_string(rational::wendel_prob(static_cast<int>(n), d));
  return v;
}

ExactValue face_prob_pinned(int n, const std::vector<int>& indices) {
  const auto r = rational::face_prob_pinned(n, indices);  // also validates
  ExactValue v;
  v.value = static_cast<double>(r);
  v.rational = to_string(r);
  return v;
}

ExactValue face_prob_bridge(int n, const std::vector<int>& indices) {
  const auto r = rational::face_prob_bridge(n, indices);
  ExactValue v;
  v.value = static_cast<double>(r);
  v.rational = to_string(r);
  return v;
}

ExactValue face_prob_temporal_sum(int n, const std::vector<int>& gaps) {
  long long prod = 1, total = 0;
  for (int j : gaps) {
    if (j < 1) throw std::invalid_argument("face_prob_temporal_sum: gaps must be >= 1");
    prod *= j;
    total += j;
  }
  if (total > n) throw std::invalid_argument("face_prob_temporal_sum: gaps exceed n");
  ExactValue v;
  v.value = 2.0 / static_cast<double>(prod);
  v.rational = "2/" + std::to_string(prod);
  return v;
}

ExactValue expected_faces(std::int64_t n, int d) {
  if (d < 2 || n < d) throw std::invalid_argument("expected_faces: need n >= d >= 2");
  ExactValue v;
  if (d == 2) {
    Kahan s;
    for (std::int64_t j = 1; j <= n; ++j) s.add(1.0 / static_cast<double>(j));
    v.value = 2.0 * s.sum;
  } else if (d == 3) {
    // c_2(t) = 2 H_{t-1}/t
    Kahan s;
    double harmonic = 0.0;
    for (std::int64_t t = 2; t <= n; ++t) {
      harmonic += 1.0 / static_cast<double>(t - 1);
      s.add(2.0 * harmonic / static_cast<double>(t));
    }
    v.value = 2.0 * s.sum;
  } else {
    const auto comp = harmonic_compositions(n, d - 1);
    Kahan s;
    for (std::int64_t t = d - 1; t <= n; ++t) s.add(comp[t]);
    v.value = 2.0 * s.sum;
  }
  if (n <= kRationalLimit) v.rational = to_string(rational::expected_faces(static_cast<int>(n), d));
  return v;
}

ExactValue expected_faces_at_origin(std::int64_t n, int d) {
  if (d < 1 || n < 1) throw std::invalid_argument("expected_faces_at_origin: need n, d >= 1");
  ExactValue v;
  if (n < d - 1) {
    v.value = 0.0;
  } else if (d == 1) {
    v.value = 2.0 * dfac_ratio(n);
  } else if (d == 2) {
    v.value = 2.0 * theorem1_float(n);
  } else if (d == 3) {
    // inner sum over i_2 collapses: sum_{i_2 < m} 1/(i_2 (m-i_2)) = 2 H_{m-1}/m
    Kahan s;
    DfacIter it;
    std::vector<double> h(n + 1, 0.0);
    for (std::int64_t m = 1; m <= n; ++m) h[m] = h[m - 1] + 1.0 / static_cast<double>(m);
    for (std::int64_t q = 0; q <= n - 2; ++q) {
      const double aq = it.next();  // a_q = a_{n-m} with m = n-q
      const std::int64_t m = n - q;
      s.add(aq * 2.0 * h[m - 1] / static_cast<double>(m));
    }
    v.value = 2.0 * s.sum;
  } else {
    const auto comp = harmonic_compositions(n, d - 1);
    Kahan s;
    DfacIter it;
    for (std::int64_t q = 0; q <= n - (d - 1); ++q) {
      const double aq = it.next();
      s.add(aq * comp[n - q]);
    }
    v.value = 2.0 * s.sum;
  }
  if (n <= kRationalLimit)
    v.rational = to_string(rational::expected_faces_at_origin(static_cast<int>(n), d));
  return v;
}

ExactValue spitzer_widom_perimeter(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("spitzer_widom_perimeter: n must be >= 1");
  // E||S_j|| = sqrt(j pi / 2) for gaussian(I_2)
  ExactValue v;
  v.value = 2.0 * std::sqrt(kPi / 2.0) * sqrt_sum(n, 1);
  return v;
}

double ball_volume(int k) { return std::pow(kPi, k / 2.0) / std::tgamma(k / 2.0 + 1.0); }

ExactValue gaussian_expected_volume(std::int64_t n, int d) {
  if (d < 2 || n < d) throw std::invalid_argument("gaussian_expected_volume: need n >= d >= 2");
  ExactValue v;
  v.value = ball_volume(d) / std::pow(2.0 * kPi, d / 2.0) * sqrt_sum(n, d);
  return v;
}

ExactValue orthoscheme_intrinsic_volume(std::int64_t n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("orthoscheme_intrinsic_volume: need 1 <= k <= n");
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  ExactValue v;
  v.value = sqrt_sum(n, k) / fact;
  return v;
}

ExactValue spherical_U(std::int64_t n, int k) {
  if (n < 1) throw std::invalid_argument("spherical_U: n must be >= 1");
  ExactValue v;
  if (k == 1)
    v.value = 0.5 - dfac_ratio(n);
  else if (k == 2)
    v.value = 0.5 - 0.5 * theorem1_float(n);
  else
    throw std::invalid_argument("spherical_U: only k = 1, 2 have closed forms");
  if (n <= kRationalLimit) v.rational = to_string(rational::spherical_U(static_cast<int>(n), k));
  return v;
}

double gaussian_norm_mean(int d) {
  return std::sqrt(2.0) * std::exp(std::lgamma((d + 1) / 2.0) - std::lgamma(d / 2.0));
}

ExactValue gaussian_v1(std::int64_t n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("gaussian_v1: n, d must be >= 1");
  ExactValue v;
  v.value = gaussian_norm_mean(d) * sqrt_sum(n, 1);
  return v;
}

AsymptoticValue asymptotic(FormulaId id, std::int64_t n, const AsymptoticParams& p) {
  if (n < 2 && id != FormulaId::exit_halfspace)
    throw std::invalid_argument("asymptotic: n must be >= 2");
  const double nn = static_cast<double>(n);
  const double ln = std::log(nn);
  AsymptoticValue a;
  a.formula_id = id;
  switch (id) {
    case FormulaId::log_asympt: a.value = ln / std::sqrt(kPi * nn); break;
    case FormulaId::gamma_asympt: a.value = 1.0 / std::sqrt(kPi * nn); break;
    case FormulaId::e_rw_0: a.value = 2.0 * std::pow(ln, p.d - 1) / std::sqrt(kPi * nn); break;
    case FormulaId::e_br_0: a.value = 2.0 * p.d * std::pow(ln, p.d - 1) / nn; break;
    case FormulaId::e_rw: a.value = 2.0 * std::pow(ln, p.d - 1); break;
    case FormulaId::theorem2: a.value = std::sqrt(2.0) * p.r * ln / std::sqrt(kPi * nn); break;
    case FormulaId::exit_halfspace: a.value = std::sqrt(2.0 / kPi) * p.r; break;
  }
  return a;
}

std::optional<FormulaId> parse_formula_id(const std::string& name) {
  if (name == "log-asympt") return FormulaId::log_asympt;
  if (name == "gamma-asympt") return FormulaId::gamma_asympt;
  if (name == "e-rw-0") return FormulaId::e_rw_0;
  if (name == "e-br-0") return FormulaId::e_br_0;
  if (name == "e-rw") return FormulaId::e_rw;
  if (name == "theorem2") return FormulaId::theorem2;
  if (name == "exit-halfspace") return FormulaId::exit_halfspace;
  return std::nullopt;
}

}  // namespace hullwalk::exactforms
