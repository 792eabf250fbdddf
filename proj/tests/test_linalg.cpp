#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hullwalk/linalg.hpp"
#include "hullwalk/simplex.hpp"

using namespace hullwalk;

TEST_CASE("det of known matrices") {
  Matrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  CHECK(det(m) == doctest::Approx(-2.0));
  CHECK(det(Matrix::identity(4)) == doctest::Approx(1.0));
}

TEST_CASE("cholesky reconstructs and rejects non-SPD") {
  Matrix s(2, 2);
  s(0, 0) = 4;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 3;
  const Matrix l = cholesky(s);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double r = 0.0;
      for (int k = 0; k < 2; ++k) r += l(i, k) * l(j, k);
      CHECK(r == doctest::Approx(s(i, j)));
    }
  Matrix bad(2, 2);
  bad(0, 0) = 1;
  bad(1, 1) = -1;
  CHECK_THROWS_AS(cholesky(bad), std::invalid_argument);
}

TEST_CASE("orthogonal_complement is orthogonal to its rows") {
  const std::vector<std::vector<double>> rows = {{1.0, 2.0, 3.0}, {0.5, -1.0, 2.0}};
  const auto n = orthogonal_complement(rows, 3);
  CHECK(std::fabs(dot(n, rows[0])) < 1e-12);
  CHECK(std::fabs(dot(n, rows[1])) < 1e-12);
  CHECK(norm(n) > 0.0);
}

TEST_CASE("gram_volume of orthogonal vectors is the product of lengths") {
  CHECK(gram_volume({{3.0, 0.0}, {0.0, 2.0}}) == doctest::Approx(6.0));
  CHECK(gram_volume({{1.0, 1.0}, {2.0, 2.0}}) == doctest::Approx(0.0));
}

TEST_CASE("phase-1 simplex: origin membership in small hulls") {
  // triangle containing the origin
  const std::vector<double> inside = {1, 0, -1, 1, -1, -1};
  CHECK(origin_in_convex_hull(inside.data(), 3, 2));
  // shifted far away
  const std::vector<double> outside = {5, 4, 3, 5, 3, 3};
  CHECK_FALSE(origin_in_convex_hull(outside.data(), 3, 2));
}

TEST_CASE("conic membership") {
  const std::vector<double> gens = {1, 0, 0, 1};  // first quadrant
  const double in_dir[2] = {0.5, 0.5};
  const double out_dir[2] = {-1.0, 0.2};
  CHECK(in_conic_hull(gens.data(), 2, 2, in_dir));
  CHECK_FALSE(in_conic_hull(gens.data(), 2, 2, out_dir));
}
