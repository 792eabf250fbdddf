#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hullwalk/increment_spec.hpp"

namespace hullwalk {

// Partial-sum trajectory S_0 = 0, S_1, ..., S_n in dimension d.
struct WalkPath {
  int d = 0;
  int n = 0;
  std::vector<double> pts;  // (n+1) x d, row k is S_k

  WalkPath() = default;
  WalkPath(int d_, int n_) : d(d_), n(n_), pts(static_cast<std::size_t>(n_ + 1) * d_, 0.0) {}

  double* point(int k) { return pts.data() + static_cast<std::size_t>(k) * d; }
  const double* point(int k) const { return pts.data() + static_cast<std::size_t>(k) * d; }
  std::span<const double> at(int k) const { return {point(k), static_cast<std::size_t>(d)}; }
};

enum class BridgeKind { difference, conditional_gaussian };

WalkPath sample_walk(const IncrementSpec& spec, int n, std::uint64_t seed);

// Bridge of length n: returned path has point(n) == 0 exactly.
// conditional_gaussian requires a gaussian spec (difference identity applies).
WalkPath sample_bridge(const IncrementSpec& spec, int n, BridgeKind kind, std::uint64_t seed);

// Exchangeable but dependent increments: one shared scale multiplies i.i.d.
// base increments. Requires a scaled-mixture spec.
WalkPath sample_exchangeable(const IncrementSpec& spec, int n, std::uint64_t seed);

}  // namespace hullwalk
