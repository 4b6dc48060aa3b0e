#include "orbweyl/linalg.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace orbweyl;
using ts::R;

namespace {

Mat m23(std::initializer_list<long long> vals, std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  auto it = vals.begin();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = R(*it++);
  return m;
}

}  // namespace

TEST_CASE("rref canonicalises and reports pivots") {
  Mat m = m23({2, 4, 1, 2}, 2, 2);
  auto pivots = rref(m);
  REQUIRE(pivots.size() == 1);
  CHECK(pivots[0] == 0);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 2);
  CHECK(m.at(1, 0) == 0);
  CHECK(m.at(1, 1) == 0);
}

TEST_CASE("rank via elimination") {
  CHECK(rank(m23({0, 1, 0, -1, 0, 0, 0, 0, 0}, 3, 3)) == 2);
  CHECK(rank(Mat(3, 3)) == 0);
  CHECK(rank(Mat::identity(4)) == 4);
}

TEST_CASE("kernel is the canonical nullspace basis") {
  Mat m = m23({0, 1, 0, -1, 0, 0, 0, 0, 0}, 3, 3);
  Mat k = kernel(m);
  REQUIRE(k.rows() == 1);
  CHECK(k.row(0) == ts::dense(3, {{2, R(1)}}));

  Mat empty(0, 4);
  Mat full = kernel(empty);
  CHECK(full == Mat::identity(4));

  CHECK(kernel(Mat::identity(3)).rows() == 0);
}

TEST_CASE("kernel satisfies rank-nullity on random matrices") {
  ts::RatSampler s(7);
  for (int trial = 0; trial < 30; ++trial) {
    Mat m(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = s.next();
    Mat k = kernel(m);
    CHECK(rank(m) + k.rows() == 5);
    for (std::size_t r = 0; r < k.rows(); ++r) CHECK(vec_is_zero(mat_vec(m, k.row(r))));
  }
}

TEST_CASE("solve finds a particular solution or reports none") {
  Mat a = m23({1, 2, 0, 1}, 2, 2);
  auto x = solve(a, {R(5), R(3)});
  REQUIRE(x.has_value());
  CHECK(*x == Vec{R(-1), R(3)});

  Mat sing = m23({1, 2, 2, 4}, 2, 2);
  CHECK(solve(sing, {R(1), R(2)}).has_value());
  CHECK(!solve(sing, {R(1), R(3)}).has_value());
}

TEST_CASE("row_space is canonical") {
  Mat a = m23({1, 2, 3, 0, 1, 1}, 2, 3);
  Mat b = m23({2, 5, 7, 1, 3, 4}, 2, 3);  // same span, different presentation
  CHECK(row_space(a) == row_space(b));
  CHECK(in_row_space(a, Vec{R(1), R(3), R(4)}));
  CHECK(!in_row_space(a, Vec{R(0), R(0), R(1)}));
}

TEST_CASE("matrix helpers behave") {
  Mat id = Mat::identity(3);
  Mat a = m23({1, 2, 3, 4, 5, 6, 7, 8, 10}, 3, 3);
  CHECK(a * id == a);
  CHECK(id * a == a);
  CHECK(a.transpose().transpose() == a);
  CHECK((a + a) == a.scaled(R(2)));
  CHECK(mat_vec(id, Vec{R(1), R(2), R(3)}) == Vec{R(1), R(2), R(3)});
  CHECK(dot(Vec{R(1), R(2)}, Vec{R(3), R(4)}) == R(11));
  CHECK(vec_sub(vec_add(Vec{R(1)}, Vec{R(2)}), Vec{R(3)}) == Vec{R(0)});
}
