#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hullwalk/rng.hpp"

using hullwalk::RngStream;

TEST_CASE("derived streams are deterministic and index-sensitive") {
  RngStream a = RngStream::derive(42, 7);
  RngStream b = RngStream::derive(42, 7);
  RngStream c = RngStream::derive(42, 8);
  bool differs = false;
  for (int i = 0; i < 16; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    if (x != c.next_u64()) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("uniform stays in [0,1) and uniform_pos in (0,1]") {
  RngStream r(123);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double v = r.uniform_pos();
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("gaussian moments are roughly standard") {
  RngStream r(99);
  double s = 0.0, s2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double g = r.gaussian();
    s += g;
    s2 += g * g;
  }
  CHECK(std::fabs(s / n) < 0.01);          // ~4.5 sigma
  CHECK(std::fabs(s2 / n - 1.0) < 0.015);  // variance 1
}

TEST_CASE("exponential has the right mean") {
  RngStream r(7);
  double s = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) s += r.exponential(2.0);
  CHECK(s / n == doctest::Approx(0.5).epsilon(0.02));
}
