#pragma once

#include <utility>
#include <vector>

#include "hullwalk/hullgeom.hpp"
#include "hullwalk/linalg.hpp"
#include "hullwalk/walkgen.hpp"

namespace hullwalk::comboracle {

// Deterministic point configuration x_0; x_1, ..., x_n (base point + increments).
struct PointSequence {
  std::vector<double> base;                 // x_0
  std::vector<std::vector<double>> steps;   // x_1 ... x_n
};

struct HalfSpace {
  std::vector<double> normal;  // unit
  double offset = 0.0;         // H = { z : <normal, z> >= offset }

  bool contains(std::span<const double> z, double tol = 0.0) const {
    return dot(normal, z) >= offset - tol;
  }
  double boundary_distance(std::span<const double> z) const {
    return dot(normal, z) - offset;
  }
};

// Cycle lemma: x_0 and x_0 + s_n on the boundary, no interior partial-sum
// difference on it; exactly one cyclic shift keeps the whole path inside H.
// Returns that shift k (sigma = (k+1..n, 1..k)); k = 0 is the identity.
// Preconditions are checked and violations raise DegenerateGeometryError.
int cycle_lemma_witness(const PointSequence& seq, const HalfSpace& h, double tol = 1e-9);

// check helper used by both the witness construction and exhaustive tests
bool shift_stays_inside(const PointSequence& seq, const HalfSpace& h, int shift, double tol = 1e-9);

// Path-wise census over the cyclic-shift family of Lemma 2: the fraction of
// permutations keeping every partial sum inside H_+(0, S_{i_1}, ..., S_{i_{d-2}}, S_n)
// resp. H_-. Exact integer counts, zero statistical error; the lemma says each
// fraction is 1/|family| for a generic path.
struct FractionCensus {
  long long hits_plus = 0;
  long long hits_minus = 0;
  long long family_size = 0;
};
FractionCensus halfspace_fraction_oracle(const WalkPath& path, const std::vector<int>& indices,
                                         double tol = 1e-9);

// Same census with the Lemma 3 family for a bridge: `bridge` must have
// bridge.n >= 2 and point(bridge.n) == 0; indices 0 <= i_1 < ... < i_{d-1} <= n
// with n = bridge.n - 1.
FractionCensus bridge_fraction_oracle(const WalkPath& bridge, const std::vector<int>& indices,
                                      double tol = 1e-9);

}  // namespace hullwalk::comboracle
