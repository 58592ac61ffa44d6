#include <memory>

#include "ccdeg/complex.hpp"
#include "doctest.h"

using namespace ccdeg;

namespace {

VarTablePtr ring3() {
  return std::make_shared<const VariableTable>(
      std::vector<std::string>{"x", "y", "z"});
}

MonomialIdeal mono_ideal(VarTablePtr r, std::vector<std::vector<int>> supports) {
  MonomialIdeal m;
  m.ring = std::move(r);
  for (auto& s : supports) {
    std::vector<Monomial::Entry> es;
    for (int v : s) es.push_back({v, 1});
    m.generators.push_back(Monomial(std::move(es)));
  }
  return m;
}

}  // namespace

TEST_CASE("stanley-reisner of (xy) on three vertices") {
  auto c = stanley_reisner(mono_ideal(ring3(), {{0, 1}}));
  REQUIRE(c.facets.size() == 2);
  CHECK(c.facets[0] == std::vector<int>{0, 2});
  CHECK(c.facets[1] == std::vector<int>{1, 2});
  CHECK(c.is_pure());
  CHECK(c.dimension() == 1);
  CHECK(complex_degree(c) == 2);
  auto f = face_vector(c);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == 3);
  CHECK(f[1] == 2);
}

TEST_CASE("stanley-reisner of the twisted cubic initial ideal") {
  auto r = std::make_shared<const VariableTable>(
      std::vector<std::string>{"x", "y", "z", "w"});
  auto c = stanley_reisner(mono_ideal(r, {{0, 2}, {0, 3}, {1, 3}}));
  CHECK(c.is_pure());
  CHECK(complex_degree(c) == 3);
}

TEST_CASE("non-pure complex refuses a degree") {
  auto c = stanley_reisner(mono_ideal(ring3(), {{0, 1}, {0, 2}}));
  // facets: {x}, {y,z}
  CHECK(!c.is_pure());
  CHECK_THROWS_AS(complex_degree(c), std::invalid_argument);
}

TEST_CASE("ehrhart of a path of two unit segments") {
  auto c = stanley_reisner(mono_ideal(ring3(), {{0, 1}}));
  auto L = ehrhart_from_unimodular(c);
  // L(t) = 2t + 1
  REQUIRE(L.size() == 2);
  CHECK(L[0] == 1);
  CHECK(L[1] == 2);
  CHECK(poly_eval(L, 0) == 1);
  CHECK(poly_eval(L, 3) == 7);
}

TEST_CASE("ehrhart of a unit square from its triangulation") {
  auto r = std::make_shared<const VariableTable>(
      std::vector<std::string>{"a", "b", "c", "d"});
  // square abcd split along the diagonal ac: minimal non-face {b, d}
  auto c = stanley_reisner(mono_ideal(r, {{1, 3}}));
  REQUIRE(c.facets.size() == 2);
  auto L = ehrhart_from_unimodular(c);
  // (t+1)^2
  REQUIRE(L.size() == 3);
  CHECK(L[0] == 1);
  CHECK(L[1] == 2);
  CHECK(L[2] == 1);
  CHECK(ehrhart_to_string(L) == "(1/2!)(t+1)(t+1)(2)");
}

TEST_CASE("multidegree bookkeeping") {
  auto c = stanley_reisner(mono_ideal(ring3(), {{0, 1}}));
  // mark x as a xi vertex: facets {x,z} (a=1,b=1) and {y,z} (a=0,b=2)
  auto md = complex_multidegree(c, {1, 0, 0}, 1, 2);
  CHECK(md.size() == 2);
  CHECK(md[{1, 2}] == 1);  // a=1, b=1
  CHECK(md[{0, 3}] == 1);  // a=0, b=2
}

TEST_CASE("facet export") {
  auto c = stanley_reisner(mono_ideal(ring3(), {{0, 1}}));
  CHECK(complex_to_text(c) == "x,z\ny,z\n");
}
