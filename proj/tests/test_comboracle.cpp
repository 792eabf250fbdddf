#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hullwalk/comboracle.hpp"
#include "hullwalk/rng.hpp"

using namespace hullwalk;
namespace co = comboracle;

namespace {

co::HalfSpace upper_half(int d) {
  co::HalfSpace h;
  h.normal.assign(d, 0.0);
  h.normal[d - 1] = 1.0;
  return h;
}

// random configuration with zero drift along the half-space normal so the
// cycle-lemma preconditions hold
co::PointSequence random_config(int d, int steps, std::uint64_t seed) {
  RngStream rng = RngStream::derive(seed, 0);
  co::PointSequence seq;
  seq.base.assign(d, 0.0);
  seq.steps.assign(steps, std::vector<double>(d));
  double drift = 0.0;
  for (auto& s : seq.steps) {
    for (int c = 0; c < d; ++c) s[c] = rng.gaussian();
    drift += s[d - 1];
  }
  for (auto& s : seq.steps) s[d - 1] -= drift / steps;
  return seq;
}

}  // namespace

TEST_CASE("cycle lemma hand examples") {
  co::HalfSpace h = upper_half(2);
  co::PointSequence seq;
  seq.base = {0.0, 0.0};
  seq.steps = {{1.0, 1.0}, {1.0, -1.0}};
  CHECK(co::cycle_lemma_witness(seq, h) == 0);
  seq.steps = {{1.0, -1.0}, {1.0, 1.0}};
  CHECK(co::cycle_lemma_witness(seq, h) == 1);
}

TEST_CASE("cycle lemma uniqueness over random configurations") {
  for (int d : {1, 2, 3}) {
    const co::HalfSpace h = upper_half(d);
    for (int rep = 0; rep < 100; ++rep) {
      const auto seq = random_config(d, 4 + rep % 5, 1000 * d + rep);
      const int k = co::cycle_lemma_witness(seq, h);
      int valid = 0;
      for (int s = 0; s < static_cast<int>(seq.steps.size()); ++s)
        valid += co::shift_stays_inside(seq, h, s) ? 1 : 0;
      CHECK(valid == 1);
      CHECK(co::shift_stays_inside(seq, h, k));
    }
  }
}

TEST_CASE("cycle lemma precondition violations raise") {
  const co::HalfSpace h = upper_half(2);
  co::PointSequence seq;
  seq.base = {0.0, 0.0};
  seq.steps = {{1.0, 1.0}, {1.0, 1.0}};  // endpoint off the boundary
  CHECK_THROWS_AS(co::cycle_lemma_witness(seq, h), DegenerateGeometryError);
}

TEST_CASE("Lemma 2 census: d=2, empty index list, fraction 1/n exactly") {
  const auto spec = IncrementSpec::standard_gaussian(2);
  for (int rep = 0; rep < 20; ++rep) {
    const WalkPath p = sample_walk(spec, 3, 100 + rep);
    const auto c = co::halfspace_fraction_oracle(p, {});
    CHECK(c.family_size == 3);
    CHECK(c.hits_plus == 1);
    CHECK(c.hits_minus == 1);
  }
}

TEST_CASE("Lemma 2 census: d=3, n=4, indices (2), fraction 1/4 exactly") {
  const auto spec = IncrementSpec::standard_gaussian(3);
  for (int rep = 0; rep < 20; ++rep) {
    const WalkPath p = sample_walk(spec, 4, 300 + rep);
    const auto c = co::halfspace_fraction_oracle(p, {2});
    CHECK(c.family_size == 4);
    CHECK(c.hits_plus == 1);
    CHECK(c.hits_minus == 1);
  }
}

TEST_CASE("Lemma 3 census on bridges") {
  const auto spec = IncrementSpec::standard_gaussian(2);
  SUBCASE("d=2, n=2, index (1): family 2") {
    for (int rep = 0; rep < 20; ++rep) {
      const WalkPath b = sample_bridge(spec, 3, BridgeKind::difference, 500 + rep);
      const auto c = co::bridge_fraction_oracle(b, {1});
      CHECK(c.family_size == 2);
      CHECK(c.hits_plus == 1);
      CHECK(c.hits_minus == 1);
    }
  }
  SUBCASE("d=2, n=3, index (2): family 4") {
    for (int rep = 0; rep < 20; ++rep) {
      const WalkPath b = sample_bridge(spec, 4, BridgeKind::difference, 700 + rep);
      const auto c = co::bridge_fraction_oracle(b, {2});
      CHECK(c.family_size == 4);
      CHECK(c.hits_plus == 1);
      CHECK(c.hits_minus == 1);
    }
  }
  SUBCASE("d=3 bridge, two indices") {
    const auto spec3 = IncrementSpec::standard_gaussian(3);
    for (int rep = 0; rep < 10; ++rep) {
      const WalkPath b = sample_bridge(spec3, 5, BridgeKind::difference, 900 + rep);
      const auto c = co::bridge_fraction_oracle(b, {1, 3});
      CHECK(c.family_size == 1 * 2 * 2);
      CHECK(c.hits_plus == 1);
      CHECK(c.hits_minus == 1);
    }
  }
}

TEST_CASE("degenerate configurations raise, not mis-count") {
  // bridge whose defining point coincides with the origin
  WalkPath b(2, 3);
  b.point(1)[0] = 0.0;
  b.point(1)[1] = 0.0;  // S_1 = 0 degenerates H(0, S_1)
  b.point(2)[0] = 1.0;
  b.point(2)[1] = 1.0;
  CHECK_THROWS(co::bridge_fraction_oracle(b, {1}));
}

TEST_CASE("index validation") {
  const auto spec = IncrementSpec::standard_gaussian(3);
  const WalkPath p = sample_walk(spec, 4, 1);
  CHECK_THROWS_AS(co::halfspace_fraction_oracle(p, {}), std::invalid_argument);   // needs d-2
  CHECK_THROWS_AS(co::halfspace_fraction_oracle(p, {4}), std::invalid_argument);  // i < n required
}
