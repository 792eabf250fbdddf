#pragma once

#include <cstdint>
#include <vector>

#include "hullwalk/estimate.hpp"
#include "hullwalk/increment_spec.hpp"

namespace hullwalk::spitzer {

// The walk seen along a fixed direction u (normalized on entry).
struct DirectionalWalkView {
  IncrementSpec spec;
  std::vector<double> direction;  // unit vector
  double variance;                // <Sigma u, u>

  DirectionalWalkView(IncrementSpec s, std::vector<double> u);
};

// R(u) by direct ladder-height simulation: run the projected walk until it
// leaves {x >= 0}, average the normalized overshoot. Trajectories that survive
// past max_steps are discarded; the discard rate is reported (T(u) has infinite
// mean, so a cap is unavoidable).
Estimate r_of_u_ladder(const DirectionalWalkView& view, int max_steps, std::int64_t samples,
                       std::uint64_t seed);

// R(u) via the truncated Spitzer series
//   (1/sqrt(2)) exp( sum_{k<=n_terms} [P(S_k^{(u)} > 0) - 1/2] / k ),
// with each positivity probability estimated from shared trajectories.
// Symmetric specs short-circuit to exactly 1/sqrt(2). The heuristic truncation
// remainder 2/sqrt(n_terms) is folded into `warning` when it dominates.
struct SeriesResult {
  Estimate estimate;
  double truncation_bound = 0.0;  // heuristic, not a proved constant
};
SeriesResult r_of_u_series(const DirectionalWalkView& view, int n_terms, std::int64_t samples,
                           std::uint64_t seed);

// E R(Sigma^{-1/2} U) over U uniform on the unit circle (d = 2), series route.
Estimate angular_average_R(const IncrementSpec& spec, int n_directions, int n_terms,
                           std::int64_t samples_per_direction, std::uint64_t seed);

// MC estimate of P(S_1, ..., S_n in H(u))
Estimate halfspace_persistence(const DirectionalWalkView& view, int n, std::int64_t samples,
                               std::uint64_t seed);

}  // namespace hullwalk::spitzer
