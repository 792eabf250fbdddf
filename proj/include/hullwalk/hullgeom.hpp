#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "hullwalk/linalg.hpp"
#include "hullwalk/walkgen.hpp"

namespace hullwalk {

// Thrown when the input is co-hyperplanar within tolerance. A null event under
// condition (H); Monte Carlo callers resample and count occurrences.
struct DegenerateGeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A (d-1)-face of the hull as sorted indices into WalkPath.points, with its
// supporting hyperplane {x : <normal, x> = offset}, normal pointing outward.
struct Facet {
  std::vector<int> vertex_indices;
  std::vector<double> normal;
  double offset = 0.0;
};

struct HullSummary {
  int d = 0;
  int n = 0;
  std::vector<Facet> facets;       // F_n
  int facets_at_origin = 0;        // |F_n'|: facets with S_0 as a vertex
  bool origin_outside = false;     // 0 not in conv(S_1..S_n); under (G) same as facets_at_origin > 0
  double volume = 0.0;             // Vol_d(C_n)
  double surface_area = 0.0;       // Vol_{d-1}(boundary)
};

struct HullConfig {
  double tol = 1e-9;  // on normalized orientation determinants
};

// Convex hull of all n+1 points S_0..S_n. Incremental beneath-beyond for
// general d, Andrew monotone chain for d=2. Requires n >= d.
HullSummary build_hull(const WalkPath& path, const HullConfig& cfg = {});

// Facets grouped by temporal structure (i_2-i_1, ..., i_d-i_{d-1}).
std::map<std::vector<int>, int> temporal_census(const HullSummary& summary);

// true iff 0 is NOT in conv(S_1, ..., S_n) (hull without S_0)
bool origin_membership(const WalkPath& path, const HullConfig& cfg = {});
bool origin_outside_points(const double* points, int npts, int d, double tol = 1e-9);

// Opening angle of the hull seen from the origin: exact arc angle for d=2
// (2*pi when the origin is interior), direction-sampling estimate for d=3.
double opening_angle(const WalkPath& path, int mc_directions = 1000, std::uint64_t seed = 1,
                     const HullConfig& cfg = {});

// flag[k-1] = (S_k not in conv(0, S_1, ..., S_{k-1})), k = 1..n
std::vector<bool> update_flags(const WalkPath& path, const HullConfig& cfg = {});

// Coordinates of each S_i in a row-orthonormal k x d frame.
WalkPath project_hull(const WalkPath& path, const Matrix& frame);

}  // namespace hullwalk
