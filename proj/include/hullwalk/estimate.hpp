#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace hullwalk {

// Monte Carlo mean with standard error and a 95% interval.
struct Estimate {
  double mean = 0.0;
  double stderror = 0.0;
  std::int64_t n_samples = 0;
  double discard_rate = 0.0;  // ladder-route truncation, degenerate resamples
  bool warning = false;       // e.g. discard rate above threshold

  std::pair<double, double> ci95() const {
    return {mean - 1.96 * stderror, mean + 1.96 * stderror};
  }
  double z_against(double exact) const {
    return stderror > 0.0 ? (mean - exact) / stderror : (mean == exact ? 0.0 : INFINITY);
  }
};

// Streaming accumulator (Welford). Chunk results merge in a fixed order so the
// final estimate does not depend on the thread count.
struct Accumulator {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Accumulator& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double delta = o.mean - mean;
    const std::int64_t total = count + o.count;
    m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) /
                     static_cast<double>(total);
    mean += delta * static_cast<double>(o.count) / static_cast<double>(total);
    count = total;
  }

  Estimate finish() const {
    Estimate e;
    e.n_samples = count;
    e.mean = mean;
    if (count > 1) e.stderror = std::sqrt(m2 / static_cast<double>(count - 1) / static_cast<double>(count));
    return e;
  }
};

// two-sample z statistic
inline double two_sample_z(const Estimate& a, const Estimate& b) {
  const double se = std::sqrt(a.stderror * a.stderror + b.stderror * b.stderror);
  if (se == 0.0) return a.mean == b.mean ? 0.0 : INFINITY;
  return (a.mean - b.mean) / se;
}

}  // namespace hullwalk
