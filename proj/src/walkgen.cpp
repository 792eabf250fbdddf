#include "hullwalk/walkgen.hpp"

#include <stdexcept>

namespace hullwalk {

namespace {

WalkPath sums_from_increments(int d, int n, const std::vector<double>& incr) {
  WalkPath path(d, n);
  for (int k = 1; k <= n; ++k) {
    const double* x = incr.data() + static_cast<std::size_t>(k - 1) * d;
    const double* prev = path.point(k - 1);
    double* cur = path.point(k);
    for (int i = 0; i < d; ++i) cur[i] = prev[i] + x[i];
  }
  return path;
}

}  // namespace

WalkPath sample_walk(const IncrementSpec& spec, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_walk: n must be >= 1");
  RngStream rng(seed);
  const int d = spec.dim();
  std::vector<double> incr(static_cast<std::size_t>(n) * d);
  for (int k = 0; k < n; ++k) spec.sample_increment(rng, incr.data() + static_cast<std::size_t>(k) * d);
  return sums_from_increments(d, n, incr);
}

WalkPath sample_bridge(const IncrementSpec& spec, int n, BridgeKind kind, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_bridge: n must be >= 2");
  if (kind == BridgeKind::conditional_gaussian && spec.kind() != IncrementKind::gaussian)
    throw std::invalid_argument("sample_bridge: conditional bridge requires gaussian increments");
  // For Gaussian walks S_k - (k/n) S_n is independent of S_n, so the difference
  // bridge has exactly the conditional-bridge law; both kinds share this path.
  WalkPath walk = sample_walk(spec, n, seed);
  const int d = spec.dim();
  const double* last = walk.point(n);
  WalkPath bridge(d, n);
  for (int k = 1; k < n; ++k) {
    const double f = static_cast<double>(k) / n;
    const double* s = walk.point(k);
    double* b = bridge.point(k);
    for (int i = 0; i < d; ++i) b[i] = s[i] - f * last[i];
  }
  // terminal point is constructed, not sampled
  for (int i = 0; i < d; ++i) bridge.point(n)[i] = 0.0;
  return bridge;
}

WalkPath sample_exchangeable(const IncrementSpec& spec, int n, std::uint64_t seed) {
  if (spec.kind() != IncrementKind::scaled_mixture)
    throw std::invalid_argument("sample_exchangeable: requires a scaled-mixture spec");
  if (n < 1) throw std::invalid_argument("sample_exchangeable: n must be >= 1");
  RngStream rng(seed);
  const int d = spec.dim();
  const double scale = spec.scale_law().sample(rng);
  std::vector<double> incr(static_cast<std::size_t>(n) * d);
  for (int k = 0; k < n; ++k) {
    double* x = incr.data() + static_cast<std::size_t>(k) * d;
    spec.sample_base_increment(rng, x);
    for (int i = 0; i < d; ++i) x[i] *= scale;
  }
  return sums_from_increments(d, n, incr);
}

}  // namespace hullwalk
