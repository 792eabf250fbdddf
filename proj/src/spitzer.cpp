#include "hullwalk/spitzer.hpp"

#include <cmath>
#include <stdexcept>

namespace hullwalk::spitzer {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double projected_increment(const IncrementSpec& spec, const std::vector<double>& u, RngStream& rng,
                           std::vector<double>& scratch) {
  spec.sample_increment(rng, scratch.data());
  double s = 0.0;
  for (int i = 0; i < spec.dim(); ++i) s += scratch[i] * u[i];
  return s;
}

}  // namespace

DirectionalWalkView::DirectionalWalkView(IncrementSpec s, std::vector<double> u)
    : spec(std::move(s)), direction(std::move(u)) {
  if (static_cast<int>(direction.size()) != spec.dim())
    throw std::invalid_argument("DirectionalWalkView: direction dimension mismatch");
  const double nn = norm(direction);
  if (nn <= 0.0) throw std::invalid_argument("DirectionalWalkView: zero direction");
  for (double& x : direction) x /= nn;  // R(u) is angular, so normalize on entry
  variance = 0.0;
  const auto& cov = spec.covariance();
  for (int i = 0; i < spec.dim(); ++i)
    for (int j = 0; j < spec.dim(); ++j) variance += direction[i] * cov(i, j) * direction[j];
  if (variance <= 0.0) throw std::invalid_argument("DirectionalWalkView: degenerate variance");
}

Estimate r_of_u_ladder(const DirectionalWalkView& view, int max_steps, std::int64_t samples,
                       std::uint64_t seed) {
  const double sd = std::sqrt(view.variance);
  std::vector<double> scratch(view.spec.dim());
  Accumulator acc;
  std::int64_t discarded = 0;
  for (std::int64_t s = 0; s < samples; ++s) {
    RngStream rng = RngStream::derive(seed, static_cast<std::uint64_t>(s));
    double pos = 0.0;
    bool exited = false;
    for (int k = 0; k < max_steps; ++k) {
      pos += projected_increment(view.spec, view.direction, rng, scratch);
      if (pos < 0.0) {
        exited = true;
        break;
      }
    }
    if (exited)
      acc.add(-pos / sd);
    else
      ++discarded;
  }
  Estimate e = acc.finish();
  e.discard_rate = static_cast<double>(discarded) / static_cast<double>(samples);
  e.warning = e.discard_rate > 0.10;
  return e;
}

SeriesResult r_of_u_series(const DirectionalWalkView& view, int n_terms, std::int64_t samples,
                           std::uint64_t seed) {
  SeriesResult res;
  if (view.spec.symmetric() || n_terms == 0) {
    // every term is exactly zero for symmetric laws; an empty sum otherwise
    res.estimate.mean = kInvSqrt2;
    res.estimate.stderror = 0.0;
    res.estimate.n_samples = samples;
    res.estimate.warning = (n_terms == 0 && !view.spec.symmetric());
    res.truncation_bound = n_terms == 0 ? 1.0 : 0.0;
    return res;
  }
  // One trajectory yields every term: y = sum_k (1{S_k > 0} - 1/2)/k, and
  // R = exp(E y)/sqrt(2). Standard error transfers by the delta method.
  std::vector<double> scratch(view.spec.dim());
  Accumulator acc;
  for (std::int64_t s = 0; s < samples; ++s) {
    RngStream rng = RngStream::derive(seed, static_cast<std::uint64_t>(s));
    double pos = 0.0;
    double y = 0.0;
    for (int k = 1; k <= n_terms; ++k) {
      pos += projected_increment(view.spec, view.direction, rng, scratch);
      y += ((pos > 0.0 ? 1.0 : 0.0) - 0.5) / static_cast<double>(k);
    }
    acc.add(y);
  }
  const Estimate y_est = acc.finish();
  res.estimate.mean = std::exp(y_est.mean) * kInvSqrt2;
  res.estimate.stderror = res.estimate.mean * y_est.stderror;
  res.estimate.n_samples = samples;
  res.truncation_bound = 2.0 / std::sqrt(static_cast<double>(n_terms));
  return res;
}

Estimate angular_average_R(const IncrementSpec& spec, int n_directions, int n_terms,
                           std::int64_t samples_per_direction, std::uint64_t seed) {
  if (spec.dim() != 2) throw std::invalid_argument("angular_average_R: d = 2 only");
  if (spec.symmetric()) {
    Estimate e;
    e.mean = kInvSqrt2;
    e.n_samples = n_directions;
    return e;
  }
  // Sigma^{-1/2} for a 2x2 SPD matrix: sqrt(M) = (M + sqrt(det) I)/sqrt(tr + 2 sqrt(det))
  const auto& cov = spec.covariance();
  const double dt = cov(0, 0) * cov(1, 1) - cov(0, 1) * cov(1, 0);
  const double sq = std::sqrt(dt);
  const double denom = std::sqrt(cov(0, 0) + cov(1, 1) + 2.0 * sq);
  const double r00 = (cov(0, 0) + sq) / denom, r01 = cov(0, 1) / denom;
  const double r11 = (cov(1, 1) + sq) / denom;
  const double rdet = r00 * r11 - r01 * r01;  // invert the 2x2 square root
  const double i00 = r11 / rdet, i01 = -r01 / rdet, i11 = r00 / rdet;

  RngStream dir_rng = RngStream::derive(seed, 0);
  Accumulator acc;
  for (int i = 0; i < n_directions; ++i) {
    const double theta = dir_rng.uniform(0.0, 6.283185307179586);
    const double ux = std::cos(theta), uy = std::sin(theta);
    std::vector<double> w = {i00 * ux + i01 * uy, i01 * ux + i11 * uy};
    DirectionalWalkView view(spec, std::move(w));
    const auto r = r_of_u_series(view, n_terms, samples_per_direction,
                                 seed + 0x517cc1b727220a95ULL * (i + 1));
    acc.add(r.estimate.mean);
  }
  return acc.finish();
}

Estimate halfspace_persistence(const DirectionalWalkView& view, int n, std::int64_t samples,
                               std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("halfspace_persistence: n must be >= 1");
  std::vector<double> scratch(view.spec.dim());
  Accumulator acc;
  for (std::int64_t s = 0; s < samples; ++s) {
    RngStream rng = RngStream::derive(seed, static_cast<std::uint64_t>(s));
    double pos = 0.0;
    bool stayed = true;
    for (int k = 0; k < n; ++k) {
      pos += projected_increment(view.spec, view.direction, rng, scratch);
      if (pos < 0.0) {
        stayed = false;
        break;
      }
    }
    acc.add(stayed ? 1.0 : 0.0);
  }
  return acc.finish();
}

}  // namespace hullwalk::spitzer
