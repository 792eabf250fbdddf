#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hullwalk/estimate.hpp"
#include "hullwalk/exactforms.hpp"
#include "hullwalk/hullgeom.hpp"
#include "hullwalk/walkgen.hpp"

namespace hullwalk::mc {

enum class Quantity {
  origin_avoidance,      // 1{0 not in conv(S_1..S_n)}
  faces,                 // |F_n|
  faces_at_origin,       // |F_n'|
  updates,               // sum_k 1{S_k not in conv(0..S_{k-1})}
  surface,               // Vol_{d-1}(boundary C_n)
  volume,                // Vol_d(C_n)
  crofton_vk,            // V_k via random projections
  opening_angle_deficit, // (pi - Omega)^+ in 2d, (2pi - Omega)^+ in 3d
  temporal_census,       // #facets with a given temporal structure
  pinned_face,           // 1{conv(S_{i_1},...,S_{i_d}) is a facet}
  wendel_iid,            // 1{0 not in conv of n i.i.d. points}
};

enum class PathKind { walk, bridge_difference, bridge_conditional, exchangeable };

struct RunOptions {
  PathKind path = PathKind::walk;
  int threads = 0;  // 0 = HULLWALK_THREADS env or 1
  HullConfig hull{};
  std::vector<int> indices;  // pinned_face
  std::vector<int> gaps;     // temporal_census
  int k = 1;                 // crofton_vk
  int frames_per_sample = 4;
  int angle_directions = 1000;
};

struct ComparisonRow {
  std::string quantity;
  exactforms::ExactValue exact;
  Estimate estimate;
  double z = 0.0;
};

// Streaming MC estimate. Samples are split into fixed-size chunks merged in a
// fixed order, so the result is bit-identical for any thread count. Degenerate
// hull samples are resampled on a fresh derived stream and counted in
// discard_rate.
Estimate estimate(Quantity q, const IncrementSpec& spec, int n, std::int64_t samples,
                  std::uint64_t seed, const RunOptions& opt = {});

// V_k(C_n) via Haar-random k-frames (orthonormalized Gaussians) and the Crofton
// normalization binom(d,k) kappa_d / (kappa_k kappa_{d-k}).
Estimate crofton_intrinsic_volume(const IncrementSpec& spec, int n, int k, std::int64_t samples,
                                  int frames_per_sample, std::uint64_t seed,
                                  const RunOptions& opt = {});

// Exact counterpart of a quantity where one exists (closed forms are d- and
// spec-restricted; callers get nullopt otherwise).
std::optional<exactforms::ExactValue> exact_counterpart(Quantity q, const IncrementSpec& spec,
                                                        int n, const RunOptions& opt = {});

// estimate + exact + z. Throws std::invalid_argument when no exact form exists.
ComparisonRow compare(Quantity q, const IncrementSpec& spec, int n, std::int64_t samples,
                      std::uint64_t seed, const RunOptions& opt = {});

// Runs the same estimate for every spec; returns the largest pairwise
// two-sample |z| (0 for a single spec).
double distribution_freeness_test(Quantity q, const std::vector<IncrementSpec>& specs, int n,
                                  std::int64_t samples, std::uint64_t seed,
                                  const RunOptions& opt = {});

std::optional<Quantity> parse_quantity(const std::string& name);
std::string quantity_name(Quantity q);
int resolve_threads(int requested);  // 0 -> HULLWALK_THREADS or 1

}  // namespace hullwalk::mc
