#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hullwalk/mcharness.hpp"

using namespace hullwalk;
namespace ef = exactforms;

TEST_CASE("trivial exact quantities: stderr 0") {
  const auto g2 = IncrementSpec::standard_gaussian(2);
  const auto est = mc::estimate(mc::Quantity::origin_avoidance, g2, 2, 10000, 1);
  CHECK(est.mean == 1.0);
  CHECK(est.stderror == 0.0);

  const auto g3 = IncrementSpec::standard_gaussian(3);
  const auto faces = mc::estimate(mc::Quantity::faces, g3, 3, 2000, 2);
  CHECK(faces.mean == 4.0);
  CHECK(faces.stderror == 0.0);
}

TEST_CASE("origin avoidance matches theorem1 at n=10") {
  const auto g2 = IncrementSpec::standard_gaussian(2);
  const auto row = mc::compare(mc::Quantity::origin_avoidance, g2, 10, 100000, 3);
  CHECK(std::fabs(row.z) < 4.0);
  CHECK(row.exact.value == doctest::Approx(ef::theorem1_prob(10).value));
  CHECK(row.estimate.discard_rate < 1e-6);
}

TEST_CASE("thread-count invariance: bit-identical estimates") {
  const auto g2 = IncrementSpec::standard_gaussian(2);
  mc::RunOptions o1, o2, o8;
  o1.threads = 1;
  o2.threads = 2;
  o8.threads = 8;
  const auto e1 = mc::estimate(mc::Quantity::faces, g2, 6, 20000, 77, o1);
  const auto e2 = mc::estimate(mc::Quantity::faces, g2, 6, 20000, 77, o2);
  const auto e8 = mc::estimate(mc::Quantity::faces, g2, 6, 20000, 77, o8);
  CHECK(e1.mean == e2.mean);
  CHECK(e1.stderror == e2.stderror);
  CHECK(e1.mean == e8.mean);
  CHECK(e1.stderror == e8.stderror);
}

TEST_CASE("CI calibration: ~95% coverage over 100 runs") {
  const auto g2 = IncrementSpec::standard_gaussian(2);
  const double exact = ef::theorem1_prob(5).value;
  int covered = 0;
  for (int run = 0; run < 100; ++run) {
    const auto est =
        mc::estimate(mc::Quantity::origin_avoidance, g2, 5, 2000, 1000 + 13 * run);
    const auto [lo, hi] = est.ci95();
    if (exact >= lo && exact <= hi) ++covered;
  }
  CHECK(covered >= 88);
  CHECK(covered <= 100);
}

TEST_CASE("bridge origin avoidance compares against bridge_prob") {
  const auto g2 = IncrementSpec::standard_gaussian(2);
  mc::RunOptions opt;
  opt.path = mc::PathKind::bridge_difference;
  const auto row = mc::compare(mc::Quantity::origin_avoidance, g2, 10, 50000, 5, opt);
  CHECK(row.exact.value == doctest::Approx(ef::bridge_prob(10).value));
  CHECK(std::fabs(row.z) < 4.0);
}

TEST_CASE("faces d=2 n=3 compares against 11/3") {
  const auto g2 = IncrementSpec::standard_gaussian(2);
  const auto row = mc::compare(mc::Quantity::faces, g2, 3, 50000, 7);
  CHECK(row.exact.value == doctest::Approx(11.0 / 3.0));
  CHECK(std::fabs(row.z) < 4.0);
}

TEST_CASE("updates expectation matches the theorem1 telescoping sum") {
  const auto g2 = IncrementSpec::uniform_sphere(2);
  const auto row = mc::compare(mc::Quantity::updates, g2, 10, 40000, 9);
  CHECK(std::fabs(row.z) < 4.0);
}

TEST_CASE("temporal census and pinned faces") {
  const auto g2 = IncrementSpec::standard_gaussian(2);
  mc::RunOptions t;
  t.gaps = {2};
  const auto census = mc::compare(mc::Quantity::temporal_census, g2, 8, 50000, 11, t);
  CHECK(census.exact.value == doctest::Approx(1.0));
  CHECK(std::fabs(census.z) < 4.0);

  mc::RunOptions p;
  p.indices = {0, 2};
  const auto pinned = mc::compare(mc::Quantity::pinned_face, g2, 5, 50000, 13, p);
  CHECK(pinned.exact.value == doctest::Approx(5.0 / 16.0));
  CHECK(std::fabs(pinned.z) < 4.0);
}

TEST_CASE("faces-at-origin identity channel, d=2") {
  const auto g2 = IncrementSpec::standard_gaussian(2);
  const auto row = mc::compare(mc::Quantity::faces_at_origin, g2, 6, 50000, 15);
  CHECK(row.exact.value == doctest::Approx(2.0 * ef::theorem1_prob(6).value));
  CHECK(std::fabs(row.z) < 4.0);
}

TEST_CASE("inequality P(0 not in hull) <= E|F_n'|/d holds in d=3 within CI") {
  const auto g3 = IncrementSpec::standard_gaussian(3);
  const auto avoid = mc::estimate(mc::Quantity::origin_avoidance, g3, 6, 30000, 17);
  const auto forigin = mc::estimate(mc::Quantity::faces_at_origin, g3, 6, 30000, 18);
  CHECK(avoid.mean <= forigin.mean / 3.0 + 4.0 * (avoid.stderror + forigin.stderror / 3.0));
}

TEST_CASE("crofton: k=d reduces to plain volume") {
  const auto g2 = IncrementSpec::standard_gaussian(2);
  const auto vk = mc::crofton_intrinsic_volume(g2, 5, 2, 20000, 2, 19);
  const auto vol = mc::estimate(mc::Quantity::volume, g2, 5, 20000, 20);
  CHECK(std::fabs(two_sample_z(vk, vol)) < 4.0);
}

TEST_CASE("crofton V_1 matches the gaussian corollary at d=2, n=5") {
  const auto g2 = IncrementSpec::standard_gaussian(2);
  const auto est = mc::crofton_intrinsic_volume(g2, 5, 1, 30000, 4, 21);
  const double exact = ef::gaussian_v1(5, 2).value;
  CHECK(std::fabs(est.mean - exact) < 4.0 * est.stderror);
}

TEST_CASE("distribution freeness across symmetric specs") {
  const std::vector<IncrementSpec> specs = {IncrementSpec::standard_gaussian(2),
                                            IncrementSpec::uniform_sphere(2),
                                            IncrementSpec::uniform_cube(2)};
  const double worst =
      mc::distribution_freeness_test(mc::Quantity::origin_avoidance, specs, 8, 30000, 23);
  CHECK(worst < 4.0);
  CHECK(mc::distribution_freeness_test(mc::Quantity::origin_avoidance, {specs[0]}, 8, 1000, 24) ==
        0.0);
}

TEST_CASE("exchangeable runs are statistically stable across seeds") {
  const auto spec = IncrementSpec::scaled_mixture(IncrementSpec::standard_gaussian(2),
                                                  ScaleLaw::uniform_on({1.0, 2.0}));
  mc::RunOptions opt;
  opt.path = mc::PathKind::exchangeable;
  const auto a = mc::estimate(mc::Quantity::faces, spec, 6, 20000, 31, opt);
  const auto b = mc::estimate(mc::Quantity::faces, spec, 6, 20000, 32, opt);
  CHECK(std::fabs(two_sample_z(a, b)) < 4.0);
  // Eq. (temporal) holds for exchangeable increments too
  mc::RunOptions t = opt;
  t.gaps = {1};
  const auto row = mc::compare(mc::Quantity::temporal_census, spec, 6, 20000, 33, t);
  CHECK(row.exact.value == doctest::Approx(2.0));
  CHECK(std::fabs(row.z) < 4.0);
}

TEST_CASE("wendel channel") {
  const auto g2 = IncrementSpec::standard_gaussian(2);
  const auto row = mc::compare(mc::Quantity::wendel_iid, g2, 3, 50000, 35);
  CHECK(row.exact.value == doctest::Approx(0.75));
  CHECK(std::fabs(row.z) < 4.0);
}

TEST_CASE("compare errors for MC-only combinations") {
  const auto exp2 = IncrementSpec::centered_exponential(2);
  CHECK_THROWS_AS(mc::compare(mc::Quantity::origin_avoidance, exp2, 5, 100, 1),
                  std::invalid_argument);
}

TEST_CASE("quantity parsing round-trip") {
  for (const char* id : {"origin-avoidance", "faces", "crofton-vk", "wendel-iid"}) {
    const auto q = mc::parse_quantity(id);
    REQUIRE(q.has_value());
    CHECK(mc::quantity_name(*q) == id);
  }
  CHECK_FALSE(mc::parse_quantity("bogus"));
}

TEST_CASE("validation errors") {
  const auto g2 = IncrementSpec::standard_gaussian(2);
  mc::RunOptions bad;
  bad.gaps = {5, 5};
  CHECK_THROWS_AS(mc::estimate(mc::Quantity::temporal_census, g2, 4, 10, 1, bad),
                  std::invalid_argument);
  mc::RunOptions k9;
  k9.k = 9;
  CHECK_THROWS_AS(mc::estimate(mc::Quantity::crofton_vk, g2, 4, 10, 1, k9),
                  std::invalid_argument);
}
