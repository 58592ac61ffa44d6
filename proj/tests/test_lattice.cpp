#include <random>

#include "ccdeg/lattice.hpp"
#include "doctest.h"

using namespace ccdeg;

namespace {

IntVec mat_apply(const IntMat& rows, const IntVec& x) {
  IntVec y(rows.size(), 0);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += rows[i][j] * x[j];
  return y;
}

bool all_zero(const IntVec& v) {
  for (auto& a : v)
    if (a != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("kernel of a rank-1 matrix") {
  IntMat rows = {{1, 1, 1}};
  auto k = kernel_basis(rows, 3);
  CHECK(k.size() == 2);
  for (auto& v : k) CHECK(all_zero(mat_apply(rows, v)));
  CHECK(integer_rank(k) == 2);
}

TEST_CASE("kernel of the identity is trivial") {
  IntMat rows = {{1, 0}, {0, 1}};
  CHECK(kernel_basis(rows, 2).empty());
}

TEST_CASE("kernel is saturated") {
  // rows 2x - 2y = 0: kernel must contain (1,1), not only (2,2)
  IntMat rows = {{2, -2}};
  auto k = kernel_basis(rows, 2);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] * k[0][0] == 1);
  CHECK(k[0][0] == k[0][1]);
}

TEST_CASE("determinants") {
  CHECK(determinant({{1, 2}, {3, 4}}) == -2);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
  CHECK(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
}

TEST_CASE("solve_rational") {
  auto s = solve_rational({{Rational(2), Rational(0)}, {Rational(0), Rational(4)}},
                          {Rational(1), Rational(1)});
  REQUIRE(s.has_value());
  CHECK((*s)[0] == Rational(1, 2));
  CHECK((*s)[1] == Rational(1, 4));
  auto bad = solve_rational({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}},
                            {Rational(0), Rational(1)});
  CHECK(!bad.has_value());
}

TEST_CASE("saturated span and lattice coordinates") {
  IntMat rows = {{2, 0}, {0, 2}};
  auto sat = saturated_span_basis(rows, 2);
  REQUIRE(sat.size() == 2);
  Integer det = determinant(sat);
  CHECK((det == 1 || det == -1));
  auto c = coordinates_in_lattice(sat, {1, 1});
  CHECK(c.has_value());
  auto outside = coordinates_in_lattice(rows, {1, 1});
  CHECK(!outside.has_value());
  auto inside = coordinates_in_lattice(rows, {2, -4});
  REQUIRE(inside.has_value());
  CHECK((*inside)[0] == 1);
  CHECK((*inside)[1] == -2);
}

TEST_CASE("random kernel / rank consistency") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    int nrows = 1 + static_cast<int>(rng() % 4);
    int ncols = 1 + static_cast<int>(rng() % 5);
    IntMat rows(nrows, IntVec(ncols));
    for (auto& r : rows)
      for (auto& v : r) v = static_cast<long>(rng() % 11) - 5;
    auto k = kernel_basis(rows, ncols);
    for (auto& v : k) CHECK(all_zero(mat_apply(rows, v)));
    CHECK(integer_rank(rows) + static_cast<int>(k.size()) == ncols);
    if (!k.empty()) CHECK(integer_rank(k) == static_cast<int>(k.size()));
  }
}
